from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qautv import words as W
from qautv.errors import IncompleteInput, InvalidWord, NotAMember
from qautv.words import PrefixRelation as R

bits = st.text(alphabet="01", max_size=8)


@pytest.mark.parametrize("a, b, rel", [
    ("0", "01", R.FIRST_PREFIX_OF_SECOND),
    ("01", "10", R.INCOMPARABLE),
    ("", "1101", R.FIRST_PREFIX_OF_SECOND),
    ("1101", "", R.SECOND_PREFIX_OF_FIRST),
    ("10", "10", R.EQUAL),
])
def test_compare(a, b, rel):
    assert W.compare(a, b) is rel


@pytest.mark.parametrize("ws, ok", [
    ([""], True), (["0", "10", "11"], True), (["0", "10"], False),
    (["0", "01", "1"], False), ([], False),
])
def test_complete_antichain(ws, ok):
    assert W.is_complete_antichain(ws) is ok


def test_kraft_sum_exact():
    assert W.kraft_sum(["0", "10"]) == Fraction(3, 4)


@pytest.mark.parametrize("a, b, out", [
    ([""], ["0", "1"], ("0", "1")),
    (["0", "1"], ["0", "10", "11"], ("0", "10", "11")),
    (["0", "10", "11"], ["00", "01", "1"], ("00", "01", "10", "11")),
])
def test_refine(a, b, out):
    assert W.refine(a, b) == out
    assert W.refine(b, a) == out


def test_refine_rejects_incomplete():
    with pytest.raises(IncompleteInput):
        W.refine(["0"], [""])


@pytest.mark.parametrize("a, leaf, out", [
    ([""], "", ("0", "1")),
    (["0", "1"], "1", ("0", "10", "11")),
    (["0", "10", "11"], "10", ("0", "100", "101", "11")),
])
def test_expand(a, leaf, out):
    assert set(W.expand(a, leaf)) == set(out)
    assert W.expand(a, leaf) == W.sort_words(out)


def test_expand_rejects_non_member():
    with pytest.raises(NotAMember):
        W.expand(["0", "1"], "01")


def test_parse_and_format():
    assert W.parse_word("^") == ""
    assert W.format_word("") == "^"
    with pytest.raises(InvalidWord):
        W.parse_word("012")


def test_canonical_order():
    assert W.sort_words(["11", "0", "", "10", "1"]) == ("", "0", "1", "10", "11")


@given(st.lists(bits, max_size=6))
def test_refinement_is_common_and_complete(ws):
    # build two complete antichains by expanding from the root along the sampled words
    a = [""]
    for w in ws:
        leaf = W.prefix_in(w, a)
        if leaf is not None and leaf != w:
            a = list(W.expand(a, leaf))
    b = ["0", "10", "11"]
    r = W.refine(a, b)
    assert W.is_complete_antichain(r)
    for x in r:
        assert W.prefix_in(x, a) is not None and W.prefix_in(x, b) is not None
