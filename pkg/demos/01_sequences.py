# Generating paper-folding sequences from instruction sets.
#
# Fold a strip of paper repeatedly, unfold it, and read the creases:
# each one is a hill (+1) or a valley (-1).  The direction chosen at
# fold s is the instruction f_s, and the whole crease sequence is
# determined by the instruction set f = (f_0, f_1, f_2, ...).
#
# Instruction sets are written in a compact text syntax:
#   '+;+'     the regular fold: +1 forever      (prefix '+', period '+')
#   '++-;+-'  three explicit signs, then the tail +,-,+,- ... repeats
#   '+-+-'    a finite set: only f_0..f_3 exist, anything deeper errors

from foldscope import (parse_instructions, pf_prefix, pf_value, negate,
                       InstructionExhausted)

regular = parse_instructions("+;+")

# The classic opening run of the regular sequence: 1 1 -1 1 1 -1 -1 1.
word = pf_prefix(regular, 16)
print("regular, first 16:   ", word.to_text())

# The same word on the {0,1} alphabet used by sequence databases
# (every -1 becomes 0):
print("as 0/1 digits:       ", word.to_oeis())

# Positions are 1-based and every value comes from one closed formula:
# write k = 2^s * r with r odd, then P[k] = f_s if r = 1 (mod 4) and
# P[k] = -f_s if r = 3 (mod 4).  Position 6 = 2 * 3 has s = 1, r = 3,
# so the value is -f_1 = -1 for the regular fold:
print("P[6] =", pf_value(regular, 6))

# Changing the instructions changes the sequence.  Here is an eventually
# periodic set: one explicit sign, then an alternating tail.
wavy = parse_instructions("+;+-")
print("'+;+-', first 16:    ", pf_prefix(wavy, 16).to_text())

# Negating every instruction negates the whole sequence.
print("negated regular:     ", pf_prefix(negate(regular), 16).to_text())

# Finite instruction sets are honest about their limits: reading past
# the last fold is an error, never a silent default.
finite = parse_instructions("+-")
try:
    pf_prefix(finite, 8)
except InstructionExhausted as exc:
    print("finite set says:     ", exc)
