import random

import pytest

from pmcut.formula import canonical_n3_formula, random_e4_formula
from pmcut.gadgets import build_clause_gadget, build_crossing_gadget, build_variable_gadget
from pmcut.reduction import reduce_formula

ACCEPTANCE_SEED = 0xE4


@pytest.fixture(scope="session")
def variable_gadget():
    return build_variable_gadget()


@pytest.fixture(scope="session")
def clause_gadget():
    return build_clause_gadget()


@pytest.fixture(scope="session")
def crossing_gadget():
    return build_crossing_gadget()


@pytest.fixture(scope="session")
def canonical_artifact():
    return reduce_formula(canonical_n3_formula())


@pytest.fixture(scope="session")
def random_instances():
    """The 20 random instances with n in {6, 9} shared by criteria 4 and 5."""
    rng = random.Random(ACCEPTANCE_SEED)
    formulas = [random_e4_formula(6 if k % 2 == 0 else 9, rng) for k in range(20)]
    return formulas
