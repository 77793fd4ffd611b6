# Re-establishing the closed-form results by brute force.
#
# Every structural claim behind the closed form is checked by finite
# enumeration: for each length n, every instruction prefix deep enough to
# influence the scan is generated (2^depth of them), the honest scan runs
# on each, and the claim is tested case by case.  Nothing is trusted;
# a failing claim comes back with the exact instruction prefix and n.

from foldscope import (replace_transition, verify_bounds,
                       verify_corollary_tails, verify_formula_vs_dfao,
                       verify_lemma_last_factor, verify_monotonicity_and_symmetry,
                       verify_theorem, build_pf_evaluator)

# The automaton and the closed formula agree everywhere (here: all
# positions up to 2^10 across all 2048 depth-11 instruction patterns;
# evaluating position 2^10 itself needs the 11th instruction bit):
print(verify_formula_vs_dfao(1 << 10, 11).to_json())

# The extremes of S(n): the max 6*phi(n) is hit for every n >= 3 and the
# min 4*phi(n) for every n >= 7:
print(verify_bounds(3, 24).to_json())

# The factor with the latest first start is always the window at 6*phi(n):
print(verify_lemma_last_factor(7, 24).to_json())

# The closed form itself, plus the claim that only the two instruction
# bits after the phi exponent matter:
print(verify_theorem(7, 24).to_json())

# Tails alternating from f_4 pin S(n) = 4*phi(n) for every head; constant
# tails pin 6*phi(n); other periodic tails mix the branches:
outcome = verify_corollary_tails(n_hi=24)
print("tail families pass:", outcome.passed)
for witness in outcome.details["catalog_witnesses"]:
    print("  mixed-branch witness:", witness)

# S(n) never decreases with n, and flipping every instruction sign leaves
# it unchanged:
print(verify_monotonicity_and_symmetry(6, 12).to_json())

# The harness can fail.  Corrupt one automaton transition and the
# equivalence sweep names a concrete witness:
broken = replace_transition(build_pf_evaluator(), 1, (1, 0), 4)
outcome = verify_formula_vs_dfao(64, 7, machine=broken)
print("broken machine detected:", not outcome.passed, outcome.counterexample)
