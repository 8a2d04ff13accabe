import random

import pytest
from hypothesis import given, settings, strategies as st

from qautv import qaut as Q
from qautv import words as W
from qautv.embeddings import (
    HatTree, elementary_expansion, hat_table, phi, theta, theta_from_pairs,
    verify_phi_well_defined, verify_theta_well_defined,
)
from qautv.errors import InvalidDepth
from qautv.thompson_v import VElement, identity, random_element

seeds = st.integers(min_value=0, max_value=2**32)


def test_theta_identity():
    assert theta(identity()).is_identity()


def test_theta_of_swap(s):
    ts = theta(s)
    assert ts.to_json() == {
        "level": 2,
        "v_part": [["00", "01"], ["01", "00"], ["10", "10"], ["11", "11"]],
        "bijection": [["^", "0"], ["0", "^"], ["1", "1"]],
    }
    assert ts.apply("0") == "" and ts.apply("") == "0"
    assert ts.apply("001") == "011"
    assert all(ts.apply(w) == w for w in W.words_upto(4) if w.startswith("1"))


def test_theta_ignores_expansion(s):
    expanded = elementary_expansion(s.as_dict(), "0")
    assert theta_from_pairs(expanded.items()) == theta(s)
    assert verify_theta_well_defined(identity(), 3)
    assert verify_theta_well_defined(s, 1)


def test_phi_identity():
    assert phi(Q.identity()).is_identity()


def test_phi_of_transposition(swap01):
    assert phi(swap01) == VElement(
        [("000", "000"), ("001", "011"), ("010", "010"), ("011", "001"), ("1", "1")])


def test_phi_refinement(swap01):
    assert verify_phi_well_defined(Q.identity(), 2)
    assert verify_phi_well_defined(swap01, 3)
    with pytest.raises(InvalidDepth):
        verify_phi_well_defined(swap01, 1)


def test_hat_tree_counts():
    hat = HatTree(("0", "10", "11"))
    assert hat.caret_address("10") == "0100"
    assert hat.p_leaf("10") == "01001" and hat.n_leaf("10") == "01000"
    assert len(hat.leaves()) == len(hat.vertices()) + 3
    assert W.is_complete_antichain(hat.leaves())


def test_hat_table_is_complete(swap01):
    table = hat_table(swap01.v_part, swap01.bijection)
    assert W.is_complete_antichain(table) and W.is_complete_antichain(table.values())


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_theta_homomorphism(seed):
    rng = random.Random(seed)
    a, b = random_element(rng, rng.randint(0, 7)), random_element(rng, rng.randint(0, 7))
    assert theta(a * b) == theta(a) * theta(b)
    assert theta(a).is_identity() == a.is_identity()


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_phi_homomorphism(seed):
    rng = random.Random(seed)
    x, y = Q.random_element(rng, 4), Q.random_element(rng, 4)
    assert phi(x * y) == phi(x) * phi(y)
    assert phi(x.inverse()) == phi(x).inverse()
    assert phi(x).is_identity() == x.is_identity()


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 3))
def test_well_definedness(seed, extra):
    rng = random.Random(seed)
    assert verify_theta_well_defined(random_element(rng, rng.randint(0, 7)), extra, rng)
    tau = Q.random_element(rng, 4)
    assert verify_phi_well_defined(tau, tau.level + extra)
