"""Dynamics of V on Cantor space: fixed points with slopes, periodic orbits,
torsion, and the slope spectrum that obstructs |r| != |s| conjugate powers.

Infinite words are eventually periodic pairs ``(head, cycle)`` meaning
``head + cycle + cycle + ...``, normalized so the head is as short as
possible and the cycle is primitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx

from . import words as W
from .errors import (
    BoundExceeded, HasNontrivialFiniteOrbits, InvariantViolation, IsTorsion,
)
from .thompson_v import VElement


# -- eventually periodic words -------------------------------------------

def _primitive_root(c: str) -> str:
    n = len(c)
    for d in range(1, n + 1):
        if n % d == 0 and c[:d] * (n // d) == c:
            return c[:d]
    return c


def normalize_point(head: str, cycle: str) -> tuple[str, str]:
    if not cycle:
        raise ValueError("cycle must be nonempty")
    cycle = _primitive_root(cycle)
    while head and head[-1] == cycle[-1]:
        head = head[:-1]
        cycle = cycle[-1] + cycle[:-1]
    return head, cycle


def point_prefix(point: tuple[str, str], n: int) -> str:
    head, cycle = point
    reps = max(0, -(-(n - len(head)) // len(cycle)))
    return (head + cycle * reps)[:n]


def _drop(point, n):
    head, cycle = point
    if n <= len(head):
        return head[n:], cycle
    r = (n - len(head)) % len(cycle)
    return "", cycle[r:] + cycle[:r]


def apply_point(v: VElement, point: tuple[str, str]) -> tuple[str, str]:
    """Image of an eventually periodic infinite word (exact)."""
    prefix = point_prefix(point, len(point[0]) + v.depth())
    a, b = v.lookup(prefix)
    head, cycle = _drop(point, len(a))
    return normalize_point(b + head, cycle)


# -- fixed points ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class FixedPointCertificate:
    """An entry (a, b) with a, b properly comparable; the unique fixed point
    in its cone and the log2-slope |a| - |b| of the affine restriction."""

    point: tuple[str, str]
    exponent: int
    entry: tuple[str, str]

    @property
    def attracting(self) -> bool:
        return self.exponent < 0

    @property
    def repelling(self) -> bool:
        return self.exponent > 0

    def to_json(self) -> dict:
        fmt = W.format_word
        return {
            "point": {"head": fmt(self.point[0]), "cycle": self.point[1]},
            "exponent": self.exponent,
            "kind": "attracting" if self.attracting else "repelling",
            "entry": [fmt(self.entry[0]), fmt(self.entry[1])],
        }


def certificate_for(a: str, b: str) -> FixedPointCertificate | None:
    if a == b or not W.comparable(a, b):
        return None
    if b.startswith(a):
        point = normalize_point(a, b[len(a):])
    else:
        point = normalize_point(b, a[len(b):])
    return FixedPointCertificate(point, len(a) - len(b), (a, b))


def fixed_points(v: VElement) -> list[FixedPointCertificate]:
    certs = (certificate_for(a, b) for a, b in v.pairs)
    return sorted(c for c in certs if c is not None)


def replay_certificate(v: VElement, cert: FixedPointCertificate, reps: int = 8) -> bool:
    """Check the certified point is fixed on long finite truncations."""
    head, cycle = cert.point
    a, b = cert.entry
    for t in range(1, reps + 1):
        w = head + cycle * t
        n = 3 * (len(head) + len(cycle) * t)
        w = point_prefix(cert.point, max(n, len(a) + 1))
        img = v.apply(w)
        m = min(len(img), len(w))
        if img[:m] != w[:m] or not w.startswith(a):
            return False
    return apply_point(v, cert.point) == cert.point


# -- periodic orbits --------------------------------------------------------

def transition_graph(v: VElement) -> nx.DiGraph:
    g = nx.DiGraph()
    dom = v.domain
    g.add_nodes_from(dom)
    for a, b in v.pairs:
        for a2 in dom:
            if W.comparable(b, a2):
                g.add_edge(a, a2)
    return g


def cycle_composite(v: VElement, cycle: list[str]) -> tuple[str, str] | None:
    """The single prefix map u -> u' followed by the points whose itinerary
    runs once around ``cycle``; None when no point can follow it."""
    m = v.as_dict()
    u = cycle[0]
    img = m[u]
    for node in cycle[1:]:
        if img.startswith(node):
            img = m[node] + img[len(node):]
        elif node.startswith(img):
            u += node[len(img):]
            img = m[node]
        else:
            return None
    if not W.comparable(img, cycle[0]):
        return None
    return u, img


def simple_cycle_periods(v: VElement) -> set[int]:
    """Periods carried by simple cycles of the cone-transition graph.

    Always a subset of the true period set; orbits whose itinerary revisits a
    cone are invisible here, so this only seeds the exact search.
    """
    lengths = set()
    for cycle in nx.simple_cycles(transition_graph(v)):
        comp = cycle_composite(v, cycle)
        if comp is not None and W.comparable(*comp):
            lengths.add(len(cycle))
    return lengths


# -- clopen sets as lists of cones ---------------------------------------------

def complement(cones) -> list[str]:
    cones = list(cones)

    def rec(u):
        if any(u.startswith(c) for c in cones):
            return []
        if not any(c.startswith(u) for c in cones):
            return [u]
        return rec(u + "0") + rec(u + "1")

    return rec("")


def intersect(S, T) -> list[str]:
    out = set()
    for s in S:
        for t in T:
            if s.startswith(t):
                out.add(s)
            elif t.startswith(s):
                out.add(t)
    return W.sort_words(out)


def preimage(v: VElement, cones) -> list[str]:
    inv = v.inverse()
    return W.sort_words({c for u in cones for c in inv.image_cones(u)})


def certify_stabilized(alpha: VElement, max_steps: int = 64) -> bool:
    """True when every periodic point of ``alpha`` is provably fixed.

    Fixed cones, attracting cones [a] of entries a -> ac and repelling cones
    [b] of entries bc -> b hold no non-fixed periodic point.  Every other
    point is periodic or drifts into an attracting periodic orbit, so when
    all periodic points are fixed the set of points that stay outside those
    cones for t steps is empty for some t; a longer orbit keeps it nonempty.
    """
    trapped = []
    for a, b in alpha.pairs:
        if a == b or b.startswith(a):
            trapped.append(a)
        elif a.startswith(b):
            trapped.append(b)
    S = complement(trapped)
    for _ in range(max_steps):
        if not S:
            return True
        S = intersect(S, preimage(alpha, S))
    return not S


def periodic_orbit_lengths(v: VElement, max_rounds: int = 12) -> set[int]:
    """Exact set of periods of the periodic points of ``v``."""
    bound = max(len(v), max(simple_cycle_periods(v), default=1))
    steps = 32
    for _ in range(max_rounds):
        found = periods_by_powers(v, bound)
        m = math.lcm(*found) if found else 1
        if certify_stabilized(v.power(m), steps):
            # every period divides m, so scanning up to m is exhaustive
            return found if m <= bound else periods_by_powers(v, m)
        bound *= 2
        steps *= 2
    raise BoundExceeded("could not certify the periodic orbit structure")


def stabilizing_power(v: VElement) -> tuple[int, VElement]:
    verdict = torsion_test(v)
    if isinstance(verdict, Torsion):
        raise IsTorsion(f"element has finite order {verdict.order}")
    lengths = periodic_orbit_lengths(v)
    m = math.lcm(*lengths) if lengths else 1
    alpha = v.power(m)
    if periodic_orbit_lengths(alpha) != {1}:
        raise InvariantViolation("v^m still has periodic orbits of length > 1")
    return m, alpha


# -- torsion ----------------------------------------------------------------

@dataclass(frozen=True)
class Torsion:
    order: int

    def to_json(self):
        return {"verdict": "torsion", "order": self.order}


@dataclass(frozen=True)
class NonTorsion:
    power: int
    cert: FixedPointCertificate

    def to_json(self):
        return {"verdict": "non-torsion", "power": self.power, "certificate": self.cert.to_json()}


DEFAULT_TORSION_BOUND = 10_000


def torsion_test(v: VElement, bound: int = DEFAULT_TORSION_BOUND) -> Torsion | NonTorsion:
    p = v
    for k in range(1, bound + 1):
        if p.is_identity():
            return Torsion(k)
        certs = fixed_points(p)
        if certs:
            return NonTorsion(k, certs[0])
        p = p.compose(v)
    raise BoundExceeded(f"no verdict after {bound} powers")


# -- slope spectrum ---------------------------------------------------------

@dataclass(frozen=True)
class SlopeSpectrum:
    values: frozenset

    def scaled(self, u: int) -> "SlopeSpectrum":
        """S_u = u * S_1."""
        return SlopeSpectrum(frozenset(u * s for s in self.values))

    @property
    def k(self) -> int:
        return max(abs(s) for s in self.values)

    def sorted(self) -> list[int]:
        return sorted(self.values)


def _require_stabilized(alpha: VElement):
    if isinstance(torsion_test(alpha), Torsion):
        raise IsTorsion("slope data needs a non-torsion element")
    if periodic_orbit_lengths(alpha) != {1}:
        raise HasNontrivialFiniteOrbits(
            "element has finite orbits of length > 1; pass stabilizing_power(v)[1]")


def important_points(alpha: VElement) -> list[FixedPointCertificate]:
    _require_stabilized(alpha)
    return fixed_points(alpha)


def slope_spectrum(alpha: VElement) -> SlopeSpectrum:
    return SlopeSpectrum(frozenset(c.exponent for c in important_points(alpha)))


def exponents_at(v: VElement) -> dict[tuple[str, str], int]:
    """Map each isolated fixed point of ``v`` to its slope exponent."""
    return {c.point: c.exponent for c in fixed_points(v)}


# -- conjugate powers --------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyCheck:
    holds: bool
    m: int | None = None
    spectrum: tuple[int, ...] | None = None
    k: int | None = None

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "m": self.m, "spectrum": self.spectrum, "k": self.k}


def conjugate_power_check(v: VElement, w: VElement, r: int, s: int) -> ConjugacyCheck:
    """Whether w^-1 v^r w == v^s; if so and v has infinite order, |r| == |s|
    is enforced and the slope data behind it is reported."""
    holds = v.power(r).conjugate(w) == v.power(s)
    if not holds or isinstance(torsion_test(v), Torsion):
        return ConjugacyCheck(holds)
    if abs(r) != abs(s):
        raise InvariantViolation(
            f"w^-1 v^{r} w = v^{s} with |r| != |s| for a non-torsion v")
    m, alpha = stabilizing_power(v)
    spec = slope_spectrum(alpha)
    return ConjugacyCheck(True, m, tuple(spec.sorted()), spec.k)


# -- independent oracle -------------------------------------------------------

def cone_covered(u: str, cones) -> bool:
    """Whether the cone [u] lies inside the union of the given cones."""
    cones = list(cones)
    if any(u.startswith(c) for c in cones):
        return True
    if not any(c.startswith(u) for c in cones):
        return False
    return cone_covered(u + "0", cones) and cone_covered(u + "1", cones)


def periods_by_powers(v: VElement, max_period: int) -> set[int]:
    """Exact periods up to ``max_period`` read from fixed sets of powers of v.

    Independent of the transition-graph method: Fix(v^j) is a union of
    identity cones and isolated points, and period j occurs when Fix(v^j)
    escapes the fixed sets of v^i for proper divisors i of j.
    """
    found = set()
    cones = {}
    p = v
    for j in range(1, max_period + 1):
        cones[j] = [a for a, b in p.pairs if a == b]
        smaller = [c for i in range(1, j) if j % i == 0 for c in cones[i]]
        if any(not cone_covered(c, smaller) for c in cones[j]):
            found.add(j)
        for cert in fixed_points(p):
            q, n = apply_point(v, cert.point), 1
            while q != cert.point:
                q, n = apply_point(v, q), n + 1
            if n == j:
                found.add(j)
        p = p.compose(v)
    return found
