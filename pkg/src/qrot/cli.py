"""Command-line front end: ``qrot <command> ...``.

Exit status is 0 on success, 1 for bad input, 2 when ``verify`` finds a
counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import annulus, farey, pfaffian, polygon, qcore, render, verify
from .laurent import LaurentPoly


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def parse_seq(text: str) -> tuple[int, ...]:
    """'1,2,1,1' -> (1, 2, 1, 1)."""
    parts = [p.strip() for p in text.split(",")]
    try:
        seq = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"malformed sequence {text!r}: expected comma-separated integers") from None
    return seq


def parse_rational(text: str) -> farey.Rational:
    try:
        return farey.Rational.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poly_out(p: LaurentPoly, as_json: bool):
    return p.to_json() if as_json else str(p)


def _emit(args, text: str, obj) -> None:
    if args.json:
        print(json.dumps(obj))
    else:
        print(text)


# -- commands ------------------------------------------------------------------


def cmd_qrat(args) -> int:
    x = parse_rational(args.rational)
    num, den = farey.q_rational_farey(x)
    _emit(args, f"num = {num} / den = {den}", {"rational": str(x), "num": num.to_json(), "den": den.to_json()})
    return 0


def cmd_cf(args) -> int:
    x = parse_rational(args.rational)
    a = farey.regular_expansion(x)
    c = farey.negative_expansion(x)
    text = f"regular  = [{', '.join(map(str, a))}]\nnegative = [[{', '.join(map(str, c))}]]"
    _emit(args, text, {"rational": str(x), "regular": list(a), "negative": list(c)})
    return 0


def cmd_continuant(args) -> int:
    seq = parse_seq(args.seq)
    if args.which == "K":
        if len(seq) % 2 or any(x < 1 for x in seq):
            raise ValueError(f"K needs an even-length sequence of positive integers, got {seq}")
        p = qcore.continuant_K(seq)
    else:
        p = qcore.continuant_E(seq)
    _emit(args, str(p), p.to_json())
    return 0


def cmd_rotundus(args) -> int:
    seq = parse_seq(args.seq)
    p = qcore.rotundus_plus(seq) if args.kind == "plus" else qcore.rotundus_minus(seq)
    _emit(args, str(p), p.to_json())
    return 0


def cmd_paths(args) -> int:
    T = polygon.build_fan(parse_seq(args.seq))
    paths = polygon.enumerate_paths(T, args.source, args.target)
    polys = {s: polygon.path_generating_poly(T, args.source, args.target, s) for s in polygon.STATISTICS}
    if args.json:
        print(
            json.dumps(
                {
                    "paths": [
                        {"vertices": list(p.vertices), "coarea": p.coarea, "area": p.area, "weight": p.weight}
                        for p in paths
                    ],
                    **{s: p.to_json() for s, p in polys.items()},
                }
            )
        )
        return 0
    for p in paths:
        route = " -> ".join(map(str, p.vertices))
        print(f"{route}  coarea={p.coarea} area={p.area} weight={p.weight}")
    print(f"{len(paths)} paths")
    for s, p in polys.items():
        print(f"{s}: {p}")
    return 0


def cmd_loops(args) -> int:
    A = annulus.build_annulus(args.kind, parse_seq(args.seq))
    loops = annulus.enumerate_loops(A)
    area = annulus.loop_generating_poly(A, "area")
    coarea = annulus.loop_generating_poly(A, "coarea")
    if args.json:
        print(
            json.dumps(
                {
                    "loops": [{"vertices": list(l.vertices), "area": l.area, "coarea": l.coarea} for l in loops],
                    "area": area.to_json(),
                    "coarea": coarea.to_json(),
                }
            )
        )
        return 0
    for l in loops:
        cyc = " -> ".join(map(str, l.vertices + l.vertices[:1]))
        print(f"{cyc}  area={l.area} coarea={l.coarea}")
    print(f"{len(loops)} loops")
    print(f"area: {area}")
    print(f"coarea: {coarea}")
    return 0


def cmd_matchings(args) -> int:
    A = annulus.build_annulus("minus", parse_seq(args.seq))
    found = annulus.list_matchings(A)
    if args.json:
        print(json.dumps({"count": len(found), "matchings": [list(m) for m in found]}))
        return 0
    for m in found:
        print("(" + ", ".join(m) + ")")
    print(f"{len(found)} matchings")
    return 0


def cmd_closures(args) -> int:
    A = annulus.build_annulus("plus", parse_seq(args.seq))
    p = annulus.closure_generating_poly(A)
    _emit(args, str(p), p.to_json())
    return 0


def cmd_pfaffian(args) -> int:
    c = parse_seq(args.seq)
    skew = pfaffian.determinant(pfaffian.build_skew(c))
    R2 = qcore.rotundus_minus(c) ** 2
    case = pfaffian.conjecture_case(c)
    if args.json:
        print(json.dumps({"skew_det": skew.to_json(), "R_squared": R2.to_json(), "skew_holds": skew == R2, "symmetric": case}))
        return 0
    print(f"det(skew) = {skew}")
    print(f"R^2       = {R2}")
    print("skew identity: " + ("holds" if skew == R2 else "FAILS"))
    print(f"(-1)^k det(sym)   = {LaurentPoly.from_json(case['lhs'])}")
    print(f"R^2 - 4 q^(sum)   = {LaurentPoly.from_json(case['rhs'])}")
    print(case["status"])
    return 0


def cmd_verify(args) -> int:
    if args.max_num < 2 or args.max_k < 1:
        raise UsageError("--max-num must be >= 2 and --max-k >= 1")
    results, report = verify.run_all(args.max_num, args.max_k)
    failures = [r for r in results if not r.passed]
    confirmed = sum(1 for r in report if r["status"] == pfaffian.CONFIRMED)
    if args.report:
        with open(args.report, "w") as fh:
            for line in report:
                fh.write(json.dumps(line) + "\n")
    if args.json:
        print(
            json.dumps(
                {
                    "checks": [{"name": r.name, "cases": r.cases, "passed": r.passed, "failure": r.failure} for r in results],
                    "conjecture": {"confirmed": confirmed, "checked": len(report)},
                    "failures": len(failures),
                }
            )
        )
    else:
        for r in results:
            print(r.line())
        print(f"CONJECTURE symmetric determinant: {confirmed}/{len(report)} confirmed")
        print(f"{len(results)} checks, {len(failures)} failures")
    return 2 if failures else 0


def cmd_render(args) -> int:
    seq = parse_seq(args.seq)
    as_json = args.json or args.out.endswith(".json")
    if args.what == "fan":
        T = polygon.build_fan(seq)
        out = json.dumps(T.to_json(), indent=1) if as_json else render.render_fan(T, args.highlight)
    else:
        A = annulus.build_annulus(args.kind, seq)
        out = json.dumps(A.to_json(), indent=1) if as_json else render.render_annulus(A, args.highlight)
    with open(args.out, "w") as fh:
        fh.write(out)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(add_help=False)
    top.add_argument("--json", action="store_true", help="machine-readable output")
    # subcommands accept --json too; SUPPRESS keeps them from resetting a flag given earlier
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p = _Parser(prog="qrot", description="q-rationals, q-continuants and q-rotundi", parents=[top])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("qrat", parents=[common], help="numerator and denominator of [r/s]_q")
    s.add_argument("rational")
    s.set_defaults(func=cmd_qrat)

    s = sub.add_parser("cf", parents=[common], help="regular and negative continued fractions")
    s.add_argument("rational")
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("continuant", parents=[common], help="q-continuant K (regular) or E (negative)")
    s.add_argument("which", choices=["K", "E"])
    s.add_argument("seq")
    s.set_defaults(func=cmd_continuant)

    s = sub.add_parser("rotundus", parents=[common], help="q-rotundus R+ or R")
    s.add_argument("kind", choices=["plus", "minus"])
    s.add_argument("seq")
    s.set_defaults(func=cmd_rotundus)

    s = sub.add_parser("paths", parents=[common], help="oriented paths in the fan of a regular sequence")
    s.add_argument("seq")
    s.add_argument("source", type=int)
    s.add_argument("target", type=int)
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("loops", parents=[common], help="closed loops in T+ or T-")
    s.add_argument("kind", choices=["plus", "minus"])
    s.add_argument("seq")
    s.set_defaults(func=cmd_loops)

    s = sub.add_parser("matchings", parents=[common], help="matchings of T-(c)")
    s.add_argument("seq")
    s.set_defaults(func=cmd_matchings)

    s = sub.add_parser("closures", parents=[common], help="closure polynomial of T+(a)")
    s.add_argument("seq")
    s.set_defaults(func=cmd_closures)

    s = sub.add_parser("pfaffian", parents=[common], help="both 2k x 2k determinant identities")
    s.add_argument("seq")
    s.set_defaults(func=cmd_pfaffian)

    s = sub.add_parser("verify", parents=[common], help="run the invariant sweeps")
    s.add_argument("--max-num", type=int, default=20)
    s.add_argument("--max-k", type=int, default=4)
    s.add_argument("--report", help="write the symmetric-identity report here (JSON lines)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="SVG (or JSON) drawing of a fan or annulus")
    s.add_argument("what", choices=["fan", "annulus"])
    s.add_argument("seq")
    s.add_argument("--out", required=True)
    s.add_argument("--kind", choices=["plus", "minus"], default="plus", help="annulus type (default plus)")
    s.add_argument("--highlight", type=int, help="shade the coarea of path/loop number i")
    s.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
