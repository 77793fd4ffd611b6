import pytest

from foldscope import build_pf_evaluator, parse_instructions


@pytest.fixture(scope="session")
def regular():
    """All-+1 instructions: the regular fold."""
    return parse_instructions("+;+")


@pytest.fixture(scope="session")
def alt_tail():
    """f_0 = +1 followed by an alternating tail (4*phi branch for n >= 7)."""
    return parse_instructions("+;+-")


@pytest.fixture(scope="session")
def evaluator():
    return build_pf_evaluator()
