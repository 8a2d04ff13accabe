"""Finite binary words, the prefix order, and finite complete antichains.

Words are plain ``str`` objects over ``"0"``/``"1"``; the empty word is
``""`` in memory and ``^`` in text.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import product
from typing import Iterable

from .errors import IncompleteInput, InvalidWord, NotAMember

EMPTY_TOKEN = "^"


class PrefixRelation(enum.Enum):
    EQUAL = "Equal"
    FIRST_PREFIX_OF_SECOND = "FirstPrefixOfSecond"
    SECOND_PREFIX_OF_FIRST = "SecondPrefixOfFirst"
    INCOMPARABLE = "Incomparable"


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise InvalidWord(f"not a binary word: {w!r}")
    return w


def parse_word(token: str) -> str:
    token = token.strip()
    if token == EMPTY_TOKEN:
        return ""
    if not token:
        raise InvalidWord("empty token (write ^ for the empty word)")
    return check_word(token)


def format_word(w: str) -> str:
    return w if w else EMPTY_TOKEN


def word_key(w: str):
    """Canonical order: by length, then lexicographic with 0 < 1."""
    return (len(w), w)


def sort_words(words: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(words, key=word_key))


def compare(a: str, b: str) -> PrefixRelation:
    if a == b:
        return PrefixRelation.EQUAL
    if b.startswith(a):
        return PrefixRelation.FIRST_PREFIX_OF_SECOND
    if a.startswith(b):
        return PrefixRelation.SECOND_PREFIX_OF_FIRST
    return PrefixRelation.INCOMPARABLE


def comparable(a: str, b: str) -> bool:
    return a.startswith(b) or b.startswith(a)


def kraft_sum(words: Iterable[str]) -> Fraction:
    return sum((Fraction(1, 2 ** len(w)) for w in words), Fraction(0))


def is_antichain(words: Iterable[str]) -> bool:
    # In lexicographic order a prefix sits immediately before some extension of it.
    ws = sorted(words)
    return all(not ws[i + 1].startswith(ws[i]) for i in range(len(ws) - 1))


def is_complete_antichain(words: Iterable[str]) -> bool:
    ws = list(words)
    if len(set(ws)) != len(ws):
        return False
    return is_antichain(ws) and kraft_sum(ws) == 1


def _require_complete(words, name):
    ws = list(words)
    if not is_complete_antichain(ws):
        raise IncompleteInput(f"{name} is not a complete antichain")
    return ws


def refine(A: Iterable[str], B: Iterable[str]) -> tuple[str, ...]:
    """Coarsest common refinement of two complete antichains."""
    A = _require_complete(A, "first antichain")
    B = _require_complete(B, "second antichain")
    out = set()
    for a in A:
        for b in B:
            if b.startswith(a):
                out.add(b)
            elif a.startswith(b):
                out.add(a)
    return sort_words(out)


def expand(A: Iterable[str], a: str) -> tuple[str, ...]:
    A = list(A)
    if a not in A:
        raise NotAMember(f"{format_word(a)} is not in the antichain")
    A.remove(a)
    return sort_words(A + [a + "0", a + "1"])


def level(k: int) -> tuple[str, ...]:
    """All 2**k words of length k, in canonical order."""
    return tuple("".join(bits) for bits in product("01", repeat=k))


def words_upto(n: int) -> list[str]:
    """All words of length <= n, canonical order (epsilon first)."""
    out = []
    for k in range(n + 1):
        out.extend(level(k))
    return out


def interior(leaves: Iterable[str]) -> tuple[str, ...]:
    """Vertices strictly above a complete antichain: all proper prefixes."""
    inner = set()
    for w in leaves:
        for i in range(len(w)):
            inner.add(w[:i])
    return sort_words(inner)


def tree_leaves(inner: Iterable[str]) -> tuple[str, ...]:
    """Leaf set of the finite rooted tree with the given interior vertices."""
    inner = set(inner)
    if not inner:
        return ("",)
    leaves = {w + c for w in inner for c in "01"} - inner
    return sort_words(leaves)


def prefix_in(w: str, antichain: Iterable[str]) -> str | None:
    """The member of ``antichain`` that is a prefix of ``w``, if any."""
    for a in antichain:
        if w.startswith(a):
            return a
    return None


def left_to_right(words: Iterable[str]) -> list[str]:
    """Order an antichain left to right in the tree (plain lexicographic)."""
    return sorted(words)
