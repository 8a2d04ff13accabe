"""Explicit copies of BS(m, +-m) inside V.

BS(m, em) sits diagonally in (Z * Z/m) x BS(1, e): the left map kills a^m,
the right one sends a -> a', b -> b'.  Both factors are realized in V and
glued side by side under the cones [0] and [1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import words as W
from .dynamics import NonTorsion, complement, torsion_test
from .errors import InvalidOrder, InvariantViolation
from .thompson_v import VElement, identity


def pair_embed(f: VElement, g: VElement) -> VElement:
    """f acting under [0] and g under [1]."""
    table = {"0" + a: "0" + b for a, b in f.pairs}
    table.update({"1" + a: "1" + b for a, b in g.pairs})
    return VElement._trusted(table)


def line_translation() -> VElement:
    """The element t: attractor 0^w, repeller 1^w, shifting the chain of cones."""
    return VElement._trusted({"0": "00", "10": "01", "11": "1"}, reduced=True)


def torus_generators() -> tuple[VElement, VElement]:
    t = line_translation()
    return pair_embed(t, identity()), pair_embed(identity(), t)


def klein_generators() -> tuple[VElement, VElement]:
    """(a, b) with b^-1 a b = a^-1: b swaps the halves, shifting once on the way back."""
    t = line_translation()
    a = pair_embed(t, t.inverse())
    table = {"0": "1"}
    table.update({"1" + d: "0" + r for d, r in t.pairs})
    return a, VElement._trusted(table)


# -- Z * Z/m by ping-pong -------------------------------------------------------

def cycle_cones(m: int) -> list[str]:
    """B_0, ..., B_{m-1}: the cones 10, 110, ..., 1^(m-1)0, 1^m."""
    if m == 1:
        return [""]
    return ["1" * (i + 1) + "0" for i in range(m - 1)] + ["1" * m]


# conjugator sending the ping-pong cones [0] and [111] of t^2 into [10]
_SQUEEZE = VElement._trusted({"0": "100", "10": "0", "110": "11", "111": "101"}, reduced=True)


def _north_south() -> tuple[VElement, str, str]:
    t2 = line_translation().power(2)
    h = t2.conjugate(_SQUEEZE)
    return h, _SQUEEZE.apply("0"), _SQUEEZE.apply("111")


def _image(v: VElement, cones) -> list[str]:
    return W.sort_words({c for u in cones for c in v.image_cones(u)})


def _inside(cones, targets) -> bool:
    return all(any(c.startswith(t) for t in targets) for c in cones)


@dataclass
class FreeProductWitness:
    m: int
    h: VElement
    c: VElement
    u_plus: str
    u_minus: str
    blocks: list[str]
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def free_product_generators(m: int) -> FreeProductWitness:
    """Generators h (infinite order) and c (order m) of Z * Z/m in V, with the
    ping-pong nesting verified as exact cone containments."""
    if m < 1:
        raise InvalidOrder(f"m must be >= 1, got {m}")
    h, u_plus, u_minus = _north_south()
    blocks = cycle_cones(m)
    if m == 1:
        c = identity()
    else:
        table = {x: x for x in complement(blocks)}
        table.update({blocks[i]: blocks[(i + 1) % m] for i in range(m)})
        c = VElement._trusted(table)
    wit = FreeProductWitness(m, h, c, u_plus, u_minus, blocks)
    ck = wit.checks
    S = [u_plus, u_minus] + blocks[1:]
    ck["U+ and U- lie in B_0"] = _inside([u_plus, u_minus], [blocks[0]])
    ck["ping-pong sets disjoint"] = W.is_antichain(S)
    ck["h(S minus U-) in U+"] = _inside(_image(h, [x for x in S if x != u_minus]), [u_plus])
    ck["h^-1(S minus U+) in U-"] = _inside(
        _image(h.inverse(), [x for x in S if x != u_plus]), [u_minus])
    ck["c has order m"] = c.power(m).is_identity() and all(
        not c.power(i).is_identity() for i in range(1, m))
    for i in range(1, m):
        ck[f"c^{i}(U+ u U-) in B_{i}"] = _inside(
            _image(c.power(i), [u_plus, u_minus]), [blocks[i]])
    if not wit.ok:
        raise InvariantViolation(f"ping-pong certificate failed: {ck}")
    return wit


# -- BS(m, em) -----------------------------------------------------------------------

@dataclass
class BSWitness:
    m: int
    e: int
    A: VElement
    B: VElement
    certificates: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.e * self.m

    def generator(self, letter: str) -> VElement:
        return {"a": self.A, "A": self.A.inverse(), "b": self.B, "B": self.B.inverse()}[letter]

    def report(self) -> dict:
        return {"m": self.m, "e": self.e, "certificates": {
            k: (v.to_json() if hasattr(v, "to_json") else v)
            for k, v in self.certificates.items()}}


def bs_generators(m: int, e: int) -> BSWitness:
    if m < 1:
        raise InvalidOrder(f"m must be >= 1, got {m}")
    if e not in (1, -1):
        raise InvalidOrder(f"e must be +1 or -1, got {e}")
    fp = free_product_generators(m)
    a2, b2 = torus_generators() if e == 1 else klein_generators()
    A = pair_embed(fp.c, a2)
    B = pair_embed(fp.h, b2)
    wit = BSWitness(m, e, A, B)
    ck = wit.certificates
    ck["relation B^-1 A^m B = A^(em)"] = A.power(m).conjugate(B) == A.power(e * m)
    ck.update({"ping-pong: " + k: v for k, v in fp.checks.items()})
    ck["A^m nontrivial"] = not A.power(m).is_identity()
    verdict = torsion_test(A)
    ck["A non-torsion"] = isinstance(verdict, NonTorsion)
    ck["A certificate"] = verdict
    if not all(v for k, v in ck.items() if isinstance(v, bool)):
        raise InvariantViolation(f"BS({m},{e * m}) witness failed: {ck}")
    return wit


# -- Britton normal forms -------------------------------------------------------------

def _a_block_exponent(word: str, i: int) -> tuple[int, int]:
    """Signed exponent of the run of a/A starting at i, and the index after it."""
    k = 0
    while i < len(word) and word[i] in "aA":
        k += 1 if word[i] == "a" else -1
        i += 1
    return k, i


def has_pinch(word: str, m: int) -> bool:
    """b^-1 a^(km) b or b a^(km) b^-1 as a subword (k = 0 included)."""
    for i, ch in enumerate(word):
        if ch in "bB":
            k, j = _a_block_exponent(word, i + 1)
            if j < len(word) and word[j] == ("b" if ch == "B" else "B") and k % m == 0:
                return True
    return False


_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}


def britton_reduced_words(m: int, max_len: int):
    """Freely reduced, pinch-free words over a, A=a^-1, b, B=b^-1 (nonempty)."""
    def extend(prefix):
        if prefix:
            yield prefix
        if len(prefix) == max_len:
            return
        for ch in "aAbB":
            if prefix and _INV[ch] == prefix[-1]:
                continue
            nxt = prefix + ch
            if not has_pinch(nxt, m):
                yield from extend(nxt)

    yield from extend("")


def britton_nontriviality(witness: BSWitness, L: int) -> bool:
    """Every nonempty Britton-reduced word of length <= L maps to a
    nontrivial element of V."""
    if L < 1:
        raise ValueError("L must be >= 1")
    cache = {"": identity()}
    for word in britton_reduced_words(witness.m, L):
        elem = cache[word[:-1]].compose(witness.generator(word[-1]))
        if elem.is_identity():
            return False
        cache[word] = elem
    return True


def free_product_words(m: int, syllables: int, h_exponents=(1, -1)):
    """Nonempty normal forms of Z * Z/m: alternating h^i and c^j, 0 < j < m."""
    c_exps = range(1, m)

    def extend(word, last):
        if word:
            yield word
        if len(word) == syllables:
            return
        if last != "h":
            for i in h_exponents:
                yield from extend(word + (("h", i),), "h")
        if last != "c":
            for j in c_exps:
                yield from extend(word + (("c", j),), "c")

    yield from extend((), None)


def free_product_nontriviality(wit: FreeProductWitness, syllables: int) -> bool:
    """Independent check of the ping-pong conclusion on short normal forms."""
    cache = {(): identity()}
    for word in free_product_words(wit.m, syllables):
        kind, k = word[-1]
        step = wit.h.power(k) if kind == "h" else wit.c.power(k)
        elem = cache[word[:-1]].compose(step)
        if elem.is_identity():
            return False
        cache[word] = elem
    return True
