"""The acceptance criteria as runnable, seeded checks.

Each check returns a :class:`CheckResult`; ``samples`` overrides every
sample count (the CLI's ``selfcheck --samples``), ``None`` means full size.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import qaut as Q
from . import words as W
from .bs_embed import (
    bs_generators, britton_nontriviality, free_product_generators,
    free_product_nontriviality, klein_generators, pair_embed, line_translation,
)
from .dynamics import (
    NonTorsion, Torsion, conjugate_power_check, exponents_at, fixed_points,
    periodic_orbit_lengths, replay_certificate, slope_spectrum,
    stabilizing_power, torsion_test,
)
from .embeddings import (
    phi, theta, verify_phi_well_defined, verify_theta_well_defined,
)
from .thompson_v import VElement, identity, random_element

S_SWAP = VElement([("0", "1"), ("1", "0")])
T_LINE = VElement([("0", "00"), ("10", "01"), ("11", "1")])


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool = True
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def tally(self, label: str, ok: bool, detail=None):
        self.counts[label] = self.counts.get(label, 0) + 1
        if not ok:
            self.passed = False
            if len(self.failures) < 5:
                self.failures.append(f"{label}: {detail}" if detail else label)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"[{status}] {self.number}. {self.name} ({counts})"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "counts": dict(sorted(self.counts.items())), "failures": self.failures}


def _n(full: int, samples):
    return full if samples is None else min(full, samples)


def _rv(rng, max_carets):
    return random_element(rng, rng.randint(0, max_carets))


def _nontrivial_v(rng, max_carets):
    while True:
        v = random_element(rng, rng.randint(1, max_carets))
        if not v.is_identity():
            return v


def _non_torsion(rng, max_carets):
    while True:
        v = _nontrivial_v(rng, max_carets)
        if isinstance(torsion_test(v), NonTorsion):
            return v


def check_group_axioms(seed, samples=None) -> CheckResult:
    res = CheckResult(1, "group axioms in V and QAut")
    rng = random.Random(seed)
    e = identity()
    for _ in range(_n(1000, samples)):
        x, y, z = (_rv(rng, 12) for _ in range(3))
        res.tally("V assoc", (x * y) * z == x * (y * z), (x, y, z))
        res.tally("V inverse", (x * x.inverse()).is_identity() and (x.inverse() * x).is_identity(), x)
        res.tally("V identity", e * x == x and x * e == x, x)
    qe = Q.identity()
    for _ in range(_n(300, samples)):
        x, y, z = (Q.random_element(rng, 4) for _ in range(3))
        res.tally("QAut assoc", (x * y) * z == x * (y * z), (x, y, z))
        res.tally("QAut inverse",
                  (x * x.inverse()).is_identity() and (x.inverse() * x).is_identity(), x)
        res.tally("QAut identity", qe * x == x and x * qe == x, x)
    return res


def _fixes_right_half(tau: Q.QAutElement) -> bool:
    return all(tau.apply(w) == w for w in W.words_upto(tau.level + 1) if w.startswith("1"))


def check_theta(seed, samples=None) -> CheckResult:
    res = CheckResult(2, "Theta: V -> QAut is an injective homomorphism")
    rng = random.Random(seed)
    for _ in range(_n(500, samples)):
        a, b = _rv(rng, 8), _rv(rng, 8)
        res.tally("hom", theta(a * b) == theta(a) * theta(b), (a, b))
    for i in range(_n(500, samples)):
        a = identity() if i % 25 == 0 else _rv(rng, 8)
        ta = theta(a)
        res.tally("kernel", ta.is_identity() == a.is_identity(), a)
        res.tally("fixes 1-words", _fixes_right_half(ta), a)
    for _ in range(_n(200, samples)):
        a = _rv(rng, 8)
        res.tally("expansion invariance",
                  verify_theta_well_defined(a, rng.randint(1, 3), rng), a)
    return res


def check_phi(seed, samples=None) -> CheckResult:
    res = CheckResult(3, "phi: QAut -> V is an injective homomorphism")
    rng = random.Random(seed)
    for _ in range(_n(500, samples)):
        x, y = Q.random_element(rng, 4), Q.random_element(rng, 4)
        res.tally("hom", phi(x * y) == phi(x) * phi(y), (x, y))
    for i in range(_n(500, samples)):
        x = Q.identity() if i % 25 == 0 else Q.random_element(rng, 4)
        res.tally("kernel", phi(x).is_identity() == x.is_identity(), x)
    for _ in range(_n(200, samples)):
        x = Q.random_element(rng, 4)
        for extra in (1, 2, 3):
            res.tally("refined decomposition", verify_phi_well_defined(x, x.level + extra), x)
    return res


def check_composite(seed, samples=None) -> CheckResult:
    res = CheckResult(4, "phi o Theta is an injective endomorphism of V")
    rng = random.Random(seed)
    for _ in range(_n(500, samples)):
        a, b = _rv(rng, 6), _rv(rng, 6)
        pa, pb = phi(theta(a)), phi(theta(b))
        res.tally("hom", phi(theta(a * b)) == pa * pb, (a, b))
        res.tally("nontrivial", pa.is_identity() == a.is_identity(), a)
    return res


def check_decompositions(seed, samples=None) -> CheckResult:
    res = CheckResult(5, "minimal decompositions and cutoff levels")
    rng = random.Random(seed)
    for _ in range(_n(300, samples)):
        tau = Q.random_element(rng, 4)
        dec = tau.minimal_decomposition()
        k = tau.level
        res.tally("reconstruction",
                  all(dec.apply(w) == tau.apply(w) for w in W.words_upto(k + 2)), tau)
        moved = set(dec.p)
        res.tally("finite support",
                  moved == set(dec.p.values()) and all(dec.p[x] != x for x in moved)
                  and all(dec.tilde_apply(w) == tau.apply(w)
                          for n in range(k, k + 3) for w in W.level(n)), tau)
        levels = [len(w) for w in tau.violation_set()]
        from_i = max(levels) + 1 if levels else 0
        res.tally("cutoff I vs Z", from_i == k == dec.cutoff_from_support(),
                  (k, from_i, dec.cutoff_from_support()))
    return res


def check_dynamics(seed, samples=None) -> CheckResult:
    res = CheckResult(6, "slope spectra and conjugate powers")
    rng = random.Random(seed)
    for _ in range(_n(200, samples)):
        v = _non_torsion(rng, 8)
        _, alpha = stabilizing_power(v)
        base = exponents_at(alpha)
        for u in (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5):
            got = exponents_at(alpha.power(u))
            res.tally("S_u = u S_1", got == {p: u * x for p, x in base.items()}, (alpha, u))
    for _ in range(_n(200, samples)):
        v = _non_torsion(rng, 8)
        _, alpha = stabilizing_power(v)
        w = _rv(rng, 8)
        res.tally("conjugation invariance",
                  slope_spectrum(alpha.conjugate(w)) == slope_spectrum(alpha), (alpha, w))
    exps = [x for x in range(-4, 5) if x]
    for _ in range(_n(200, samples)):
        v = _non_torsion(rng, 8)
        w = _rv(rng, 8)
        while True:
            r, s = rng.choice(exps), rng.choice(exps)
            if abs(r) != abs(s):
                break
        res.tally("no |r| != |s| conjugate powers",
                  v.power(r).conjugate(w) != v.power(s), (v, w, r, s))
    for _ in range(_n(1000, samples)):
        v = _rv(rng, 8)
        verdict = torsion_test(v)
        if isinstance(verdict, Torsion):
            n = verdict.order
            ok = v.power(n).is_identity() and all(
                not v.power(i).is_identity() for i in range(1, n))
            res.tally("torsion verdict", ok, v)
        else:
            cert = verdict.cert
            p = v.power(verdict.power)
            res.tally("non-torsion verdict", replay_certificate(p, cert), v)
    return res


def check_bs(seed, samples=None) -> CheckResult:
    res = CheckResult(7, "BS(m, +-m) embeddings in V")
    for m in (1, 2, 3, 4):
        fp = free_product_generators(m)
        res.tally("ping-pong certificates", fp.ok, m)
        res.tally("free product words", free_product_nontriviality(fp, 8), m)
        for e in (1, -1):
            w = bs_generators(m, e)
            A, B = w.A, w.B
            res.tally("relation", A.power(m).conjugate(B) == A.power(e * m), (m, e))
            res.tally("A non-torsion", isinstance(torsion_test(A), NonTorsion), (m, e))
            res.tally("Britton L=6", britton_nontriviality(w, 6), (m, e))
    a, b = klein_generators()
    res.tally("klein relation", a.conjugate(b) == a.inverse())
    b2 = b * b
    res.tally("klein b^2", b2 == pair_embed(line_translation(), line_translation())
              and isinstance(torsion_test(b2), NonTorsion))
    return res


def check_worked_examples(seed=None, samples=None) -> CheckResult:
    res = CheckResult(8, "worked examples")
    s, t = S_SWAP, T_LINE
    ts = theta(s)
    res.tally("theta(s)", ts.to_json() == {
        "level": 2,
        "v_part": [["00", "01"], ["01", "00"], ["10", "10"], ["11", "11"]],
        "bijection": [["^", "0"], ["0", "^"], ["1", "1"]],
    })
    swap01 = Q.vertex_transposition("0", "1")
    res.tally("phi((0 1))", phi(swap01) == VElement(
        [("000", "000"), ("001", "011"), ("010", "010"), ("011", "001"), ("1", "1")]))
    fps = fixed_points(t)
    res.tally("fixed points of t",
              [(c.point, c.exponent) for c in fps] == [(("", "0"), -1), (("", "1"), 1)])
    res.tally("spectrum of t", slope_spectrum(t).sorted() == [-1, 1]
              and slope_spectrum(t).scaled(3).sorted() == [-3, 3])
    res.tally("compose(s, t)", s * t == VElement([("00", "01"), ("01", "1"), ("1", "00")]))
    res.tally("periods", periodic_orbit_lengths(s) == {2} and periodic_orbit_lengths(t) == {1})
    res.tally("conjugate power", bool(conjugate_power_check(t, t, 5, 5)))
    return res


ALL_CHECKS = (
    check_group_axioms, check_theta, check_phi, check_composite,
    check_decompositions, check_dynamics, check_bs, check_worked_examples,
)


def run_all(seed: int, samples=None, progress=None) -> list[CheckResult]:
    results = []
    for i, check in enumerate(ALL_CHECKS):
        start = time.perf_counter()
        res = check(seed * 1000 + i, samples)
        res.seconds = time.perf_counter() - start
        results.append(res)
        if progress:
            progress(res)
    return results
