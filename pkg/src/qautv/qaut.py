"""Quasi-automorphisms of the 2-edge-coloured rooted binary tree.

A :class:`QAutElement` is kept in its cutoff disjoint decomposition: a level
``k``, a prefix table whose domain is every word of length ``k`` (the V-part),
and a bijection from the ``2**k - 1`` words shorter than ``k`` onto the
interior vertices of the range tree (the bijection part).  ``k`` is the least
level below which the map respects children and colours, so the form is
unique and equality is structural.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

from . import words as W
from .errors import InvalidDepth, MalformedDecomposition, ParseError
from .thompson_v import VElement, random_tree


def _is_tree_map_at(table: dict[str, str], w: str) -> bool:
    img = table[w]
    return table[w + "0"] == img + "0" and table[w + "1"] == img + "1"


class QAutElement:
    __slots__ = ("level", "_v", "_b", "_key")

    def __init__(self, level: int, v_part: dict[str, str], bijection: dict[str, str]):
        # Trusted constructor: callers pass an already canonical decomposition.
        self.level = level
        self._v = v_part
        self._b = bijection
        self._key = (
            level,
            tuple(sorted(v_part.items(), key=lambda p: W.word_key(p[0]))),
            tuple(sorted(bijection.items(), key=lambda p: W.word_key(p[0]))),
        )

    # -- construction ------------------------------------------------------

    @classmethod
    def from_function(cls, f: Callable[[str], str], level: int) -> "QAutElement":
        """Canonical form of the total map ``f``.

        ``f`` must already act as a colour-respecting tree map on every vertex
        of length >= ``level``; the cut is then pulled up as far as possible.
        """
        table = {w: f(w) for w in W.words_upto(level)}
        k = level
        while k > 0 and all(_is_tree_map_at(table, w) for w in W.level(k - 1)):
            k -= 1
        v_part = {a: table[a] for a in W.level(k)}
        bijection = {w: table[w] for w in W.words_upto(k - 1)}
        return cls(k, v_part, bijection)

    @classmethod
    def from_parts(cls, v_table, bijection) -> "QAutElement":
        v_table = dict(v_table)
        bijection = dict(bijection)
        for w in list(v_table) + list(v_table.values()) + list(bijection) + list(bijection.values()):
            W.check_word(w)
        lengths = {len(a) for a in v_table}
        if len(lengths) != 1:
            raise MalformedDecomposition("V-part domain is not a full level")
        (k,) = lengths
        if set(v_table) != set(W.level(k)):
            raise MalformedDecomposition(f"V-part domain is not the full level {k}")
        rng = list(v_table.values())
        if len(set(rng)) != len(rng) or not W.is_complete_antichain(rng):
            raise MalformedDecomposition("V-part range is not a complete antichain")
        inner = set(W.interior(rng))
        if set(bijection) != set(W.words_upto(k - 1)):
            raise MalformedDecomposition(
                f"bijection must be defined on exactly the {2 ** k - 1} words shorter than {k}")
        if len(set(bijection.values())) != len(bijection) or set(bijection.values()) != inner:
            raise MalformedDecomposition(
                "bijection must map onto the interior vertices of the range tree")

        def f(w):
            if len(w) >= k:
                return v_table[w[:k]] + w[k:]
            return bijection[w]

        return cls.from_function(f, k)

    # -- accessors ---------------------------------------------------------

    @property
    def v_part(self) -> dict[str, str]:
        return dict(self._v)

    @property
    def bijection(self) -> dict[str, str]:
        return dict(self._b)

    def range_words(self) -> tuple[str, ...]:
        return W.sort_words(self._v.values())

    def is_identity(self) -> bool:
        return self.level == 0 and self._v[""] == ""

    def __eq__(self, other):
        if not isinstance(other, QAutElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"QAutElement(level={self.level}, v_part={len(self._v)} pairs)"

    # -- action ------------------------------------------------------------

    def apply(self, w: str) -> str:
        k = self.level
        if len(w) >= k:
            return self._v[w[:k]] + w[k:]
        return self._b[w]

    __call__ = apply

    def inverse_apply(self, y: str) -> str:
        inv = {b: a for a, b in self._b.items()}
        if y in inv:
            return inv[y]
        for a, b in self._v.items():
            if y.startswith(b):
                return a + y[len(b):]
        raise AssertionError("unreachable: range antichain is complete")

    # -- group operations --------------------------------------------------

    def compose(self, other: "QAutElement") -> "QAutElement":
        """``self`` first, then ``other``."""
        shortest = min(len(b) for b in self._v.values())
        K = max(self.level, self.level + other.level - shortest)
        return QAutElement.from_function(lambda w: other.apply(self.apply(w)), K)

    __mul__ = compose

    def inverse(self) -> "QAutElement":
        # The range tree of the V-part is generally not a full level, so the
        # inverse is first written over the full level at the range depth.
        K = max(len(b) for b in self._v.values())
        inv_b = {b: a for a, b in self._b.items()}
        inv_v = {b: a for a, b in self._v.items()}

        def f(y):
            if y in inv_b:
                return inv_b[y]
            for i in range(len(y) + 1):
                a = inv_v.get(y[:i])
                if a is not None:
                    return a + y[i:]
            raise AssertionError("unreachable")

        return QAutElement.from_function(f, K)

    def power(self, n: int) -> "QAutElement":
        base = self if n >= 0 else self.inverse()
        result = identity()
        for _ in range(abs(n)):
            result = result.compose(base)
        return result

    def equals(self, other: "QAutElement") -> bool:
        return self == other

    # -- decompositions ----------------------------------------------------

    def cutoff_level(self) -> int:
        return self.level

    def violation_set(self) -> tuple[str, ...]:
        """Vertices ``w`` with ``tau(w i) != tau(w) i`` for some child ``i``."""
        out = []
        for w in W.words_upto(self.level - 1):
            img = self.apply(w)
            if self.apply(w + "0") != img + "0" or self.apply(w + "1") != img + "1":
                out.append(w)
        return tuple(out)

    def disjoint_decomposition(self, depth: int) -> tuple[dict[str, str], dict[str, str]]:
        """The (non-canonical when depth > k) disjoint decomposition at a full level."""
        if depth < self.level:
            raise InvalidDepth("depth below the cutoff level")
        v = {a: self.apply(a) for a in W.level(depth)}
        b = {w: self.apply(w) for w in W.words_upto(depth - 1)}
        return v, b

    def minimal_decomposition(self) -> "MinimalDecomposition":
        return minimal_decomposition(self)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        fmt = W.format_word
        return {
            "level": self.level,
            "v_part": [[fmt(a), fmt(b)] for a, b in self._key[1]],
            "bijection": [[fmt(a), fmt(b)] for a, b in self._key[2]],
        }

    @classmethod
    def from_json(cls, data) -> "QAutElement":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            v = {W.parse_word(a): W.parse_word(b) for a, b in data["v_part"]}
            b = {W.parse_word(x): W.parse_word(y) for x, y in data["bijection"]}
            declared = int(data.get("level", -1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed QAut JSON: {exc}") from exc
        elem = cls.from_parts(v, b)
        if declared >= 0 and len(next(iter(v))) != declared:
            raise MalformedDecomposition(
                f"declared level {declared} does not match the V-part domain")
        return elem


_IDENTITY = QAutElement(0, {"": ""}, {})


def identity() -> QAutElement:
    return _IDENTITY


def from_parts(v_table, bijection) -> QAutElement:
    return QAutElement.from_parts(v_table, bijection)


def vertex_transposition(x: str, y: str) -> QAutElement:
    """The quasi-automorphism swapping two vertices and fixing all others."""
    k = max(len(x), len(y)) + 1
    swap = {x: y, y: x}
    return QAutElement.from_function(lambda w: swap.get(w, w), k)


def random_element(seed, max_level: int) -> QAutElement:
    """A random element whose disjoint decomposition lives at level <= max_level."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    k = rng.randint(0, max_level)
    ran = random_tree(rng, 2 ** k - 1)
    rng.shuffle(ran)
    inner = list(W.interior(ran))
    rng.shuffle(inner)
    return QAutElement.from_parts(dict(zip(W.level(k), ran)),
                                  dict(zip(W.words_upto(k - 1), inner)))


# -- minimal decomposition ------------------------------------------------

def _split_suffix(w: str, y: str) -> tuple[str, str, str]:
    n = 0
    while n < min(len(w), len(y)) and w[len(w) - 1 - n] == y[len(y) - 1 - n]:
        n += 1
    return w[:len(w) - n], y[:len(y) - n], w[len(w) - n:]


@dataclass(frozen=True)
class MinimalDecomposition:
    """tau = v~ p: the minimal tree pair, the interior bijection, and the
    finitely supported correction permutation (applied after v~)."""

    source: QAutElement = field(repr=False)
    v_min: VElement
    b: dict
    p: dict

    @property
    def domain_interior(self) -> tuple[str, ...]:
        return W.interior(self.v_min.domain)

    @property
    def range_interior(self) -> tuple[str, ...]:
        return W.interior(self.v_min.range)

    def tilde_apply(self, w: str) -> str:
        if w in self.b:
            return self.b[w]
        return self.v_min.apply(w)

    def apply(self, w: str) -> str:
        x = self.tilde_apply(w)
        return self.p.get(x, x)

    def support(self) -> tuple[str, ...]:
        return W.sort_words(self.p)

    def gamma(self) -> set[tuple[str, str]]:
        """Pairs (x_w, y_w) left after stripping the longest common suffix of
        w and tau(w), over all words w of length <= k + 1."""
        tau = self.source
        return {_split_suffix(w, tau.apply(w))[:2] for w in W.words_upto(tau.level + 1)}

    def essential_pairs(self) -> set[tuple[str, str]]:
        """Pairs realized by infinitely many words: exactly those seen at length k + 1."""
        tau = self.source
        return {_split_suffix(w, tau.apply(w))[:2] for w in W.level(tau.level + 1)}

    def z_set(self) -> tuple[str, ...]:
        tau = self.source
        D, R = set(self.domain_interior), set(self.range_interior)
        image_D = {tau.apply(w) for w in D}
        z = {w for w in D if tau.apply(w) not in R}
        z |= {tau.inverse_apply(y) for y in R - image_D}
        z |= {tau.inverse_apply(y) for y in self.p}
        return W.sort_words(z)

    def cutoff_from_support(self) -> int:
        """Cutoff level recovered from the permutation data.

        The deepest point of Z(p) bounds the cut from below, but a vertex just
        above a leaf of the minimal domain tree may break the colour relation
        while tau and v~ agree there, so the leaf depth is also a lower bound.
        """
        z = self.z_set()
        from_z = max(len(w) for w in z) + 1 if z else 0
        return max(from_z, self.v_min.depth())


def minimal_decomposition(tau: QAutElement) -> MinimalDecomposition:
    v_min = VElement._trusted(dict(tau.v_part))
    D = W.interior(v_min.domain)
    R = set(W.interior(v_min.range))
    b = {}
    for w in D:
        img = tau.apply(w)
        if img in R:
            b[w] = img
    left_d = [w for w in D if w not in b]
    left_r = W.sort_words(R - set(b.values()))
    b.update(zip(left_d, left_r))
    dec = MinimalDecomposition(tau, v_min, b, {})
    p = {}
    for w in W.words_upto(tau.level - 1):
        x, y = dec.tilde_apply(w), tau.apply(w)
        if x != y:
            p[x] = y
    return MinimalDecomposition(tau, v_min, b, p)
