"""Elements of Thompson's group V as bijective prefix-replacement tables.

An element is stored as its reduced tree-pair diagram: a bijection between
two finite complete antichains, with no reducible caret left.  ``compose(u, v)``
means "apply ``u`` first, then ``v``" (right actions throughout).
"""

from __future__ import annotations

import json
import random
from typing import Iterable

from . import words as W
from .errors import (
    IncompleteCover, InvalidAntichain, NotBijection, ParseError,
    UndefinedOnVertex,
)


def _reduce_map(m: dict[str, str]) -> dict[str, str]:
    m = dict(m)
    changed = True
    while changed:
        changed = False
        for a in sorted(m, key=len, reverse=True):
            if not a or a[-1] != "0" or a not in m:
                continue
            sib = a[:-1] + "1"
            if sib not in m:
                continue
            r0, r1 = m[a], m[sib]
            if r0 and r0[-1] == "0" and r1 == r0[:-1] + "1":
                del m[a], m[sib]
                m[a[:-1]] = r0[:-1]
                changed = True
    return m


class VElement:
    """A reduced tree-pair diagram (D, R, sigma), read as a table a -> b."""

    __slots__ = ("_map", "_pairs", "_hash")

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        pairs = [(W.check_word(a), W.check_word(b)) for a, b in pairs]
        dom = [a for a, _ in pairs]
        ran = [b for _, b in pairs]
        for side, name in ((dom, "domain"), (ran, "range")):
            if len(set(side)) != len(side):
                raise NotBijection(f"duplicate word in {name}")
            if not W.is_antichain(side):
                raise InvalidAntichain(f"{name} words are not pairwise incomparable")
            if W.kraft_sum(side) != 1:
                raise IncompleteCover(f"{name} antichain is not complete")
        self._set(_reduce_map(dict(pairs)))

    def _set(self, m):
        self._map = m
        self._pairs = tuple(sorted(m.items(), key=lambda p: W.word_key(p[0])))
        self._hash = hash(self._pairs)

    @classmethod
    def _trusted(cls, m: dict[str, str], reduced: bool = False) -> "VElement":
        obj = cls.__new__(cls)
        obj._set(m if reduced else _reduce_map(m))
        return obj

    from_pairs = classmethod(lambda cls, pairs: cls(pairs))

    # -- accessors ---------------------------------------------------------

    @property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return self._pairs

    def as_dict(self) -> dict[str, str]:
        return dict(self._map)

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self._pairs)

    @property
    def range(self) -> tuple[str, ...]:
        return W.sort_words(self._map.values())

    def depth(self) -> int:
        return max(len(a) for a in self._map)

    def range_depth(self) -> int:
        return max(len(b) for b in self._map.values())

    def is_identity(self) -> bool:
        return self._pairs == (("", ""),)

    def __len__(self):
        return len(self._pairs)

    def __eq__(self, other):
        if not isinstance(other, VElement):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{W.format_word(a)}->{W.format_word(b)}" for a, b in self._pairs)
        return f"VElement({body})"

    # -- action ------------------------------------------------------------

    def lookup(self, w: str) -> tuple[str, str] | None:
        """The table entry whose domain word is a prefix of ``w``."""
        m = self._map
        for i in range(len(w) + 1):
            a = w[:i]
            if a in m:
                return a, m[a]
        return None

    def apply(self, w: str) -> str:
        hit = self.lookup(w)
        if hit is None:
            raise UndefinedOnVertex(
                f"{W.format_word(w)} lies above the domain antichain")
        a, b = hit
        return b + w[len(a):]

    __call__ = apply

    def image_cones(self, u: str) -> list[str]:
        """Cones covering the image of the cone [u] (exact, possibly several)."""
        hit = self.lookup(u)
        if hit is not None:
            a, b = hit
            return [b + u[len(a):]]
        return [b for a, b in self._pairs if a.startswith(u)]

    # -- group operations --------------------------------------------------

    def compose(self, other: "VElement") -> "VElement":
        """``self`` first, then ``other``."""
        out = {}
        om = other._map
        for a, b in self._pairs:
            hit = other.lookup(b)
            if hit is not None:
                d, r = hit
                out[a] = r + b[len(d):]
            else:
                for d, r in om.items():
                    if d.startswith(b):
                        out[a + d[len(b):]] = r
        return VElement._trusted(out)

    __mul__ = compose

    def inverse(self) -> "VElement":
        return VElement._trusted({b: a for a, b in self._pairs}, reduced=True)

    def power(self, k: int) -> "VElement":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = identity()
        while k:
            if k & 1:
                result = result.compose(base)
            k >>= 1
            if k:
                base = base.compose(base)
        return result

    __pow__ = power

    def conjugate(self, w: "VElement") -> "VElement":
        """``w^-1 self w``."""
        return w.inverse().compose(self).compose(w)

    def equals(self, other: "VElement") -> bool:
        return self == other

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        return "".join(f"{W.format_word(a)} -> {W.format_word(b)}\n"
                       for a, b in self._pairs)

    def to_json(self) -> dict:
        return {"pairs": [[W.format_word(a), W.format_word(b)] for a, b in self._pairs]}

    @classmethod
    def from_text(cls, text: str) -> "VElement":
        pairs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.split("#", 1)[0]
            if not stripped.strip():
                continue
            if "->" not in stripped:
                col = len(line) - len(line.lstrip()) + 1
                raise ParseError("expected 'a -> b'", lineno, col)
            left, right = stripped.split("->", 1)
            for token, col in ((left, 1), (right, len(left) + 3)):
                bad = next((i for i, ch in enumerate(token) if ch not in "01^ \t"), None)
                if bad is not None or not token.strip():
                    raise ParseError(
                        f"bad word {token.strip()!r}", lineno,
                        col + (bad if bad is not None else 0))
            pairs.append((W.parse_word(left), W.parse_word(right)))
        if not pairs:
            raise ParseError("no pairs found", 1, 1)
        return cls(pairs)

    @classmethod
    def from_json(cls, data) -> "VElement":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            raw = data["pairs"]
            pairs = [(W.parse_word(a), W.parse_word(b)) for a, b in raw]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed V element JSON: {exc}") from exc
        return cls(pairs)


_IDENTITY = VElement._trusted({"": ""}, reduced=True)


def identity() -> VElement:
    return _IDENTITY


def from_pairs(pairs) -> VElement:
    return VElement(pairs)


def reduce(pairs) -> VElement:
    return VElement(pairs)


def compose(u: VElement, v: VElement) -> VElement:
    return u.compose(v)


def inverse(v: VElement) -> VElement:
    return v.inverse()


def power(v: VElement, k: int) -> VElement:
    return v.power(k)


def equals(u: VElement, v: VElement) -> bool:
    return u == v


def apply(v: VElement, w: str) -> str:
    return v.apply(w)


def random_tree(rng: random.Random, n_carets: int) -> list[str]:
    """Leaves of a random binary tree grown by ``n_carets`` leaf expansions."""
    leaves = [""]
    for _ in range(n_carets):
        i = rng.randrange(len(leaves))
        w = leaves.pop(i)
        leaves[i:i] = [w + "0", w + "1"]
    return leaves


def random_element(seed, n_carets: int) -> VElement:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    dom = random_tree(rng, n_carets)
    ran = random_tree(rng, n_carets)
    rng.shuffle(ran)
    return VElement._trusted(dict(zip(dom, ran)))


def expanded_pairs(v: VElement, depth: int) -> dict[str, str]:
    """An unreduced table for ``v`` whose domain is the full level ``depth``."""
    if depth < v.depth():
        raise ValueError("depth below the domain tree")
    return {a: v.apply(a) for a in W.level(depth)}
