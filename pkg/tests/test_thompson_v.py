import random

import pytest
from hypothesis import given, settings, strategies as st

from qautv import thompson_v as TV
from qautv import words as W
from qautv.errors import (
    IncompleteCover, InvalidAntichain, NotBijection, ParseError, UndefinedOnVertex,
)
from qautv.thompson_v import VElement, identity, random_element

seeds = st.integers(min_value=0, max_value=2**32)


def pointwise(v, depth):
    """Images of every word deep enough to lie below the domain antichain."""
    return {w: v.apply(w) for w in W.level(depth)}


def brute_compose(u, v, depth):
    return {w: v.apply(u.apply(w)) for w in W.level(depth)}


def test_from_pairs_examples(t):
    assert VElement([("", "")]).is_identity()
    assert VElement([("00", "00"), ("01", "01"), ("1", "1")]) == identity()
    assert W.is_complete_antichain(t.domain) and W.is_complete_antichain(t.range)
    assert len(t) == 3


@pytest.mark.parametrize("pairs, err", [
    ([("0", "0")], IncompleteCover),
    ([("0", "0"), ("01", "1"), ("1", "10")], InvalidAntichain),
    ([("0", "0"), ("1", "0")], NotBijection),
])
def test_from_pairs_rejects(pairs, err):
    with pytest.raises(err):
        VElement(pairs)


def test_apply_examples(s, t):
    assert identity().apply("0110") == "0110"
    assert s.apply("001") == "101"
    assert t.apply("110") == "10"
    with pytest.raises(UndefinedOnVertex):
        t.apply("1")


def test_compose_examples(s, t):
    assert (s * s).is_identity()
    assert s * t == VElement([("00", "01"), ("01", "1"), ("1", "00")])
    assert t.power(0) == identity()
    assert t.inverse() == VElement([("00", "0"), ("01", "10"), ("1", "11")])


def test_compose_matches_pointwise_oracle(s, t):
    got = s * t
    assert pointwise(got, 4) == brute_compose(s, t, 4)


def test_reduce_examples(t):
    assert TV.reduce([("0", "0"), ("10", "10"), ("11", "11")]) == identity()
    assert TV.reduce(t.pairs) == t
    assert TV.reduce(t.pairs).pairs == t.pairs


def test_random_element_examples():
    assert random_element(3, 0) == identity()
    assert len(random_element(1, 3)) <= 4
    assert random_element(11, 5) == random_element(11, 5)


def test_power_by_squaring_agrees_with_iteration(t):
    acc = identity()
    for k in range(7):
        assert t.power(k) == acc
        acc = acc * t
    assert t.power(-3) == t.inverse() * t.inverse() * t.inverse()


def test_text_and_json_round_trip(t):
    text = t.to_text()
    assert text == "0 -> 00\n10 -> 01\n11 -> 1\n"
    assert VElement.from_text(text) == t
    assert VElement.from_json(t.to_json()) == t
    assert identity().to_text() == "^ -> ^\n"


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        VElement.from_text("0 -> 1\n1 => 0\n")
    assert info.value.line == 2


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 10), st.integers(0, 10))
def test_compose_pointwise(seed, n1, n2):
    rng = random.Random(seed)
    u, v = random_element(rng, n1), random_element(rng, n2)
    depth = max(u.depth() + v.depth(), 1) + 1
    assert pointwise(u * v, depth) == brute_compose(u, v, depth)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 12))
def test_inverse_and_canonical_form(seed, n):
    v = random_element(seed, n)
    assert (v * v.inverse()).is_identity()
    # no reducible caret survives
    d = v.as_dict()
    for a, b in d.items():
        if a.endswith("0"):
            sib = a[:-1] + "1"
            assert not (sib in d and b.endswith("0") and d[sib] == b[:-1] + "1")


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 8), st.integers(1, 3))
def test_expand_then_reduce_round_trip(seed, n, extra):
    v = random_element(seed, n)
    expanded = TV.expanded_pairs(v, v.depth() + extra)
    assert TV.reduce(expanded.items()) == v


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 6), st.integers(0, 6))
def test_equality_matches_exhaustive_oracle(seed, n1, n2):
    rng = random.Random(seed)
    u, v = random_element(rng, n1), random_element(rng, n2)
    depth = max(u.depth(), v.depth(), 1) + 1
    assert (u == v) == (pointwise(u, depth) == pointwise(v, depth))
