import random

import pytest
from hypothesis import given, settings, strategies as st

from qautv import qaut as Q
from qautv import words as W
from qautv.embeddings import theta
from qautv.errors import InvalidDepth, MalformedDecomposition

seeds = st.integers(min_value=0, max_value=2**32)


def agree(x, y, depth):
    return all(x.apply(w) == y.apply(w) for w in W.words_upto(depth))


def test_identity_from_parts():
    e = Q.from_parts({"": ""}, {})
    assert e == Q.identity() and e.level == 0 and e.is_identity()


def test_transposition_from_parts(swap01):
    level2 = {a: a for a in W.level(2)}
    tau = Q.from_parts(level2, {"": "", "0": "1", "1": "0"})
    assert tau == swap01
    assert tau.level == 2


def test_level3_presentation_recuts(swap01):
    level3 = {a: a for a in W.level(3)}
    b = {w: w for w in W.words_upto(2)}
    b.update({"0": "1", "1": "0"})
    tau = Q.from_parts(level3, b)
    assert tau == swap01 and tau.level == 2


@pytest.mark.parametrize("v, b", [
    ({"0": "0", "1": "1"}, {"": "1"}),              # bijection lands on a leaf
    ({"0": "0", "11": "11", "10": "10"}, {"": ""}),  # domain not a full level
    ({"0": "0", "1": "0"}, {"": ""}),                # range not an antichain
    ({"0": "0", "1": "1"}, {}),                      # bijection too small
])
def test_from_parts_rejects(v, b):
    with pytest.raises(MalformedDecomposition):
        Q.from_parts(v, b)


def test_apply_examples(swap01):
    assert Q.identity().apply("0101") == "0101"
    assert swap01.apply("0") == "1"
    assert swap01.apply("00") == "00"
    assert swap01.apply("") == ""


def test_compose_examples(swap01):
    assert (swap01 * swap01.inverse()).is_identity()
    assert (swap01 * swap01).is_identity()


def test_cutoff_examples(swap01):
    assert Q.identity().cutoff_level() == 0
    assert swap01.cutoff_level() == 2
    # the root breaks the colour relation too: 0 -> 1 but the root is fixed
    assert set(swap01.violation_set()) == {"", "0", "1"}


def test_minimal_decomposition_examples(swap01, t):
    d = Q.identity().minimal_decomposition()
    assert d.v_min.is_identity() and d.b == {} and d.p == {}
    d = swap01.minimal_decomposition()
    assert d.v_min.is_identity() and d.b == {} and d.p == {"0": "1", "1": "0"}
    assert d.essential_pairs() == {("", "")}
    assert d.gamma() == {("", ""), ("0", "1"), ("1", "0")}
    tau = theta(t)
    d = tau.minimal_decomposition()
    assert not d.v_min.is_identity()
    assert all(d.apply(w) == tau.apply(w) for w in W.words_upto(tau.level + 2))


def test_support_formula_needs_tree_depth(s):
    # Z is empty here, so Z alone would put the cut at the root
    tau = theta(s)
    d = tau.minimal_decomposition()
    assert d.z_set() == ()
    assert tau.level == 2 == d.cutoff_from_support()


def test_disjoint_decomposition_depth(swap01):
    with pytest.raises(InvalidDepth):
        swap01.disjoint_decomposition(1)
    v, b = swap01.disjoint_decomposition(3)
    assert Q.from_parts(v, b) == swap01


def test_json_round_trip(swap01):
    data = swap01.to_json()
    assert data == {"level": 2,
                    "v_part": [["00", "00"], ["01", "01"], ["10", "10"], ["11", "11"]],
                    "bijection": [["^", "^"], ["0", "1"], ["1", "0"]]}
    assert Q.QAutElement.from_json(data) == swap01


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_bijective_on_deep_levels(seed):
    tau = Q.random_element(seed, 4)
    ws = W.words_upto(tau.level + 1)
    images = {tau.apply(w) for w in ws}
    # every vertex up to depth k+1 has exactly one preimage
    assert all(tau.inverse_apply(tau.apply(w)) == w for w in ws)
    assert len(images) == len(ws)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_compose_and_equality_pointwise(seed):
    rng = random.Random(seed)
    x, y = Q.random_element(rng, 4), Q.random_element(rng, 4)
    depth = x.level + y.level + 3
    xy = x * y
    assert all(xy.apply(w) == y.apply(x.apply(w)) for w in W.words_upto(depth))
    assert (x == y) == agree(x, y, max(x.level, y.level) + 1)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_canonical_level_is_minimal(seed):
    tau = Q.random_element(seed, 4)
    levels = [len(w) for w in tau.violation_set()]
    assert tau.level == (max(levels) + 1 if levels else 0)
    assert tau.minimal_decomposition().cutoff_from_support() == tau.level
