"""Command-line front end.

Exit status: 0 success, 1 domain error (bad input, failed precondition),
2 falsified invariant.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from . import qaut as Q
from . import words as W
from .bs_embed import bs_generators, britton_nontriviality
from .dynamics import (
    conjugate_power_check, fixed_points, important_points,
    periodic_orbit_lengths, slope_spectrum, stabilizing_power, torsion_test,
)
from .embeddings import phi, theta
from .errors import DomainError, InvariantViolation, ParseError
from .thompson_v import VElement


def load_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {source}: {exc.strerror}") from exc


def parse_element(text: str):
    """A VElement or QAutElement from text or JSON."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        if "level" in data or "v_part" in data:
            return Q.QAutElement.from_json(data)
        return VElement.from_json(data)
    return VElement.from_text(text)


def load_element(source: str):
    return parse_element(load_text(source))


def load_v(source: str) -> VElement:
    elem = load_element(source)
    if not isinstance(elem, VElement):
        raise DomainError(f"{source}: expected a V element")
    return elem


def load_qaut(source: str) -> Q.QAutElement:
    elem = load_element(source)
    if not isinstance(elem, Q.QAutElement):
        raise DomainError(f"{source}: expected a QAut element (JSON with level/v_part/bijection)")
    return elem


def serialize(elem, as_json: bool = False) -> str:
    if isinstance(elem, VElement) and not as_json:
        return elem.to_text()
    return json.dumps(elem.to_json(), indent=2) + "\n"


def _same_kind(x, y):
    if type(x) is not type(y):
        raise DomainError("operands must both be V elements or both QAut elements")


def _pairs_json(d: dict) -> list:
    return [[W.format_word(a), W.format_word(b)]
            for a, b in sorted(d.items(), key=lambda p: W.word_key(p[0]))]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- verbs ------------------------------------------------------------------

def cmd_compose(args):
    x, y = load_element(args.a), load_element(args.b)
    _same_kind(x, y)
    return serialize(x.compose(y), args.json)


def cmd_inverse(args):
    return serialize(load_element(args.a).inverse(), args.json)


def cmd_power(args):
    return serialize(load_element(args.a).power(args.k), args.json)


def cmd_reduce(args):
    return serialize(load_element(args.a), args.json)


def cmd_eq(args):
    x, y = load_element(args.a), load_element(args.b)
    return "true\n" if type(x) is type(y) and x == y else "false\n"


def cmd_apply(args):
    word = W.parse_word(args.w)
    return W.format_word(load_element(args.a).apply(word)) + "\n"


def cmd_theta(args):
    return serialize(theta(load_v(args.a)))


def cmd_phi(args):
    return serialize(phi(load_qaut(args.t)), args.json)


def cmd_decompose(args):
    tau = load_qaut(args.t)
    dec = tau.minimal_decomposition()
    return _dump({
        "v_min": _pairs_json(dec.v_min.as_dict()),
        "b": _pairs_json(dec.b),
        "p": _pairs_json(dec.p),
        "gamma": sorted([W.format_word(a), W.format_word(b)] for a, b in dec.gamma()),
        "essential": sorted([W.format_word(a), W.format_word(b)]
                            for a, b in dec.essential_pairs()),
    })


def cmd_cutoff(args):
    tau = load_qaut(args.t)
    dec = tau.minimal_decomposition()
    return _dump({
        "level": tau.cutoff_level(),
        "violation_set": [W.format_word(w) for w in tau.violation_set()],
        "z_set": [W.format_word(w) for w in dec.z_set()],
        "level_from_support": dec.cutoff_from_support(),
    })


def cmd_dyn(args):
    if args.sub == "conj-check":
        v, w = load_v(args.a), load_v(args.w)
        return _dump(conjugate_power_check(v, w, args.r, args.s).to_json())
    v = load_v(args.a)
    if args.sub == "fixed":
        return _dump([c.to_json() for c in fixed_points(v)])
    if args.sub == "periods":
        return _dump(sorted(periodic_orbit_lengths(v)))
    if args.sub == "torsion":
        return _dump(torsion_test(v, args.bound).to_json())
    if args.sub == "spectrum":
        m, alpha = stabilizing_power(v)
        spec = slope_spectrum(alpha)
        return _dump({
            "m": m,
            "important_points": [c.to_json() for c in important_points(alpha)],
            "S_1": spec.sorted(),
            "k": spec.k,
        })
    raise DomainError(f"unknown dyn subcommand {args.sub}")


def cmd_bs(args):
    wit = bs_generators(args.m, args.e)
    if args.sub == "gen":
        report = wit.report()
        report["A"] = wit.A.to_json()["pairs"]
        report["B"] = wit.B.to_json()["pairs"]
        if args.json:
            return _dump(report)
        return ("# A\n" + wit.A.to_text() + "# B\n" + wit.B.to_text()
                + "# certificates\n" + _dump(report["certificates"]))
    ok = britton_nontriviality(wit, args.britton)
    if not ok:
        raise InvariantViolation(f"a Britton-reduced word of length <= {args.britton} is trivial")
    return _dump({"m": args.m, "e": args.e, "britton_length": args.britton,
                  "britton_nontrivial": ok, **{"certificates": wit.report()["certificates"]}})


def cmd_selfcheck(args):
    results = checks.run_all(args.seed, args.samples)
    failed = [r for r in results if not r.passed]
    if args.json:
        out = _dump({"seed": args.seed, "samples": args.samples,
                     "results": [r.to_json() for r in results]})
    else:
        out = f"selfcheck seed={args.seed} samples={args.samples}\n"
        out += "".join(r.line() + "\n" for r in results)
    if failed:
        sys.stdout.write(out)
        raise InvariantViolation(f"{len(failed)} criteria failed")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qautv", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="JSON output for V elements")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, *operands, help=None):
        sp = sub.add_parser(name, help=help)
        for op in operands:
            sp.add_argument(op)
        sp.set_defaults(func=func)
        return sp

    verb("compose", cmd_compose, "a", "b", help="apply A, then B")
    verb("inverse", cmd_inverse, "a")
    verb("power", cmd_power, "a").add_argument("k", type=int)
    verb("reduce", cmd_reduce, "a", help="canonical form")
    verb("eq", cmd_eq, "a", "b")
    verb("apply", cmd_apply, "a", "w")
    verb("theta", cmd_theta, "a", help="V -> QAut")
    verb("phi", cmd_phi, "t", help="QAut -> V")
    verb("decompose", cmd_decompose, "t", help="minimal decomposition (v_min, b, p)")
    verb("cutoff", cmd_cutoff, "t")

    dyn = sub.add_parser("dyn", help="dynamics of a V element")
    dyn_sub = dyn.add_subparsers(dest="sub", required=True)
    for name in ("fixed", "periods", "torsion", "spectrum"):
        sp = dyn_sub.add_parser(name)
        sp.add_argument("a")
        if name == "torsion":
            sp.add_argument("--bound", type=int, default=10_000)
    cc = dyn_sub.add_parser("conj-check", help="is w^-1 v^r w = v^s ?")
    cc.add_argument("a")
    cc.add_argument("w")
    cc.add_argument("r", type=int)
    cc.add_argument("s", type=int)
    dyn.set_defaults(func=cmd_dyn)

    bs = sub.add_parser("bs", help="BS(m, em) generators in V")
    bs_sub = bs.add_subparsers(dest="sub", required=True)
    for name in ("gen", "verify"):
        sp = bs_sub.add_parser(name)
        sp.add_argument("m", type=int)
        sp.add_argument("e", type=int, choices=(-1, 1))
        if name == "verify":
            sp.add_argument("--britton", type=int, default=6, metavar="L")
    bs.set_defaults(func=cmd_bs)

    sc = sub.add_parser("selfcheck", help="run the acceptance criteria")
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--samples", type=int, default=None)
    sc.set_defaults(func=cmd_selfcheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
