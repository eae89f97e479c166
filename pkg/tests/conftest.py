import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fairchk import SymbolicManager, parse_model, parse_pairs

F1_TEXT = "graph 3\ne 0 1\ne 1 2\ne 2 0\n"
F2_TEXT = "graph 4\ne 0 1\ne 1 0\ne 1 2\ne 2 3\ne 3 2\n"
F3_TEXT = "mdp 3\ne 0 1\ne 1 0\ne 1 2\ne 2 2\nrandom 1\n"


@pytest.fixture
def f1():
    return parse_model(F1_TEXT)


@pytest.fixture
def f2():
    return parse_model(F2_TEXT)


@pytest.fixture
def f3():
    return parse_model(F3_TEXT)


@pytest.fixture(params=["bitset", "obdd"])
def backend(request):
    return request.param


def mgr_for(model, backend="bitset"):
    return SymbolicManager.from_model(model, backend=backend)


@pytest.fixture
def pairs_l0_u2():
    return parse_pairs("pairs 1\nL 1 0\nU 1 2\n", 3)
