import pytest

from qautv import qaut as Q
from qautv.thompson_v import VElement


@pytest.fixture
def s():
    return VElement([("0", "1"), ("1", "0")])


@pytest.fixture
def t():
    return VElement([("0", "00"), ("10", "01"), ("11", "1")])


@pytest.fixture
def swap01():
    return Q.vertex_transposition("0", "1")
