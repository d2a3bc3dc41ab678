"""Command-line front end: ``transcert {eval|verify|curves|ybe|liouville}``.

Exit codes: 0 certified true or a plain value, 1 certified false (or a
verify mismatch), 2 undecided or consistent-within, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import claims as cl
from . import curves as cv
from . import liouville as lv
from . import ybe
from .errors import ExprSyntaxError, TranscertError, UnknownClaim
from .expr import Compare, VerdictKind, certify, evaluate, parse

EXIT_TRUE, EXIT_FALSE, EXIT_UNDECIDED, EXIT_USAGE = 0, 1, 2, 3
_EXIT = {
    VerdictKind.CERTIFIED_TRUE: EXIT_TRUE,
    VerdictKind.CERTIFIED_FALSE: EXIT_FALSE,
    VerdictKind.CONSISTENT_WITHIN: EXIT_UNDECIDED,
    VerdictKind.UNDECIDED: EXIT_UNDECIDED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _default_precision() -> int:
    raw = os.environ.get("TRANSCERT_PRECISION")
    if raw is None:
        return 128
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TRANSCERT_PRECISION must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_eval(args) -> int:
    node = parse(args.expr)
    if isinstance(node, Compare):
        v = certify(node, args.precision, args.max_precision)
        if args.json:
            _emit({"expr": args.expr, "verdict": v.kind.value, "eps": None if v.eps is None else str(v.eps),
                   "lhs": cl.interval_strings(v.lhs), "rhs": cl.interval_strings(v.rhs),
                   "precision": v.precision_used})
        else:
            print(v)
            print(f"  lhs {v.lhs.re}")
            print(f"  rhs {v.rhs.re}")
        return _EXIT[v.kind]
    z = evaluate(node, args.precision)
    if args.json:
        _emit({"expr": args.expr, "re": cl.interval_strings(z.re), "im": cl.interval_strings(z.im),
               "precision": args.precision})
    elif z.is_real():
        print(z.re)
    else:
        print(f"{z.re} + {z.im} i")
    return EXIT_TRUE


def _markdown(reports, expected) -> str:
    lines = ["| id | verdict | expected | lhs | rhs | notes |", "|---|---|---|---|---|---|"]
    for rep in reports:
        d = rep.as_dict()
        span = lambda x: "" if x is None else f"[{x[0][:18]}, {x[1][:18]}]"  # noqa: E731
        lines.append(f"| {d['id']} | {d['verdict']} | {expected[d['id']]['verdict']} | "
                     f"{span(d['lhs'])} | {span(d['rhs'])} | {'; '.join(d['notes'])} |")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    ids = list(cl.CLAIM_IDS) if args.ids == ["all"] else [i.upper() for i in args.ids]
    for cid in ids:
        if cid not in cl.REGISTRY:
            raise UnknownClaim(cid)
    expected = cl.expected_verdicts()
    reports = []
    for cid in sorted(ids):
        opts = {}
        if cid == "C16" and args.grid is not None:
            opts["step"] = float(args.grid)
        if cid == "C05" and args.grid is not None:
            opts["step"] = Fraction(args.grid)
        if cid == "C18":
            opts["seed"] = args.seed
        reports.append(cl.run_claim(cid, args.precision, args.max_precision, **opts))
    ok = all(r.kind.value == expected[r.id]["verdict"] for r in reports)
    if args.json:
        _emit([r.as_dict(args.timing) for r in reports])
    elif args.markdown:
        print(_markdown(reports, expected))
    else:
        for r in reports:
            want = expected[r.id]["verdict"]
            mark = "ok" if r.kind.value == want else f"MISMATCH (expected {want})"
            print(f"{r.id}  {r.verdict!s:<28} {mark}  {r.statement}")
            for note in r.notes:
                print(f"      note: {note}")
            if r.id == "C16" and args.grid is not None:
                for name, row in r.details["family"].items():
                    print(f"      {name}: grid {row['grid']}")
                    for x, res in zip(row["grid"], row["residuals"]):
                        print(f"        x={x:+.2f} " + " ".join(f"{v:.1e}" for v in res))
    return EXIT_TRUE if ok else EXIT_FALSE


def _curve_from_args(args) -> cv.Curve:
    if args.circle is not None:
        return cv.Circle(args.circle)
    if args.ellipse is not None:
        a, b = args.ellipse
        return cv.Ellipse(a, b)
    if args.ngon is not None:
        return cv.regular_polygon(args.ngon)
    if args.polygon:
        pts = [tuple(float(t) for t in p.split(",")) for p in args.polygon]
        return cv.ConvexPolygon.from_points(pts)
    if args.triangle:
        return cv.equilateral_triangle()
    if args.reuleaux is not None:
        return cv.reuleaux_polygon(args.reuleaux)
    raise UsageError("choose a curve: --circle, --ellipse, --ngon, --polygon, --triangle or --reuleaux")


def cmd_curves(args) -> int:
    if args.action == "report":
        rep = cv.conjecture_report(_curve_from_args(args), args.definition)
        _emit(rep.as_dict())
        return EXIT_TRUE
    found = cv.falsify_search(args.family, args.definition, args.trials, args.seed)
    _emit({"family": args.family, "definition": args.definition, "trials": args.trials,
           "seed": args.seed, "counterexamples": [c.as_dict() for c in found]})
    return EXIT_TRUE


def _j_from_args(args):
    if args.majorana:
        return "majorana", ybe.majorana_J()
    alpha = Fraction(args.alpha)
    return f"alpha={alpha}", ybe.alpha_family(alpha)


def cmd_ybe(args) -> int:
    name, J = _j_from_args(args)
    if args.action == "report":
        r = ybe.j_report(J)
        out = {"operator": name, "j_squared_plus_identity": r.squares_to_minus_identity,
               "commutator": r.commutation_12_23, "anticommutator": r.anticommutation_12_23,
               "euler_residual_bound": ybe.euler_matrix_residual(J, "interval", args.precision)}
    elif args.action == "grid":
        pts, grid = ybe.ybe_grid(J, float(args.grid or 1.0))
        out = {"operator": name, "grid": pts, "residuals": grid}
    else:
        s = ybe.fuzz_matrix_inequality(args.trials or 10_000, args.seed)
        out = {"samples": s.samples, "holds": s.holds, "max_certificate_gap": s.max_certificate_gap,
               "violations": s.violations}
    _emit(out)
    return EXIT_TRUE


def cmd_liouville(args) -> int:
    if args.action == "witness":
        w = lv.approx_witness(args.n)
        _emit(w.as_dict())
        return EXIT_TRUE if w.holds else EXIT_FALSE
    if args.action == "partial":
        _emit({"n": args.n, "value": str(lv.liouville_partial(args.n))})
        return EXIT_TRUE
    q = lv.liouville_quadratic(max(args.n, 2), args.precision)
    _emit({"root1": str(q.root1), "root2": cl.interval_strings(q.root2),
           "residual": cl.interval_strings(q.residual), "factorization_ok": q.factorization_ok,
           "monic_at_minus_one": str(q.monic_at_minus_one)})
    return EXIT_TRUE


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=int, default=None, help="working precision in bits")
    common.add_argument("--max-precision", type=int, default=512)
    common.add_argument("--json", action="store_true")
    common.add_argument("--markdown", action="store_true")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--grid", default=None, help="grid step")
    common.add_argument("--def", dest="definition", choices=cv.DEFINITIONS, default=cv.WIDTH)

    parser = _Parser(prog="transcert", description="Certified checks of transcendental-number claims.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="enclose an expression or certify a comparison")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run registered claims")
    p.add_argument("ids", nargs="+", help="claim ids or 'all'")
    p.add_argument("--timing", action="store_true", help="include runtimes in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curves", parents=[common], help="convex-curve measures and falsification")
    p.add_argument("action", choices=("report", "falsify"))
    p.add_argument("--circle", type=float)
    p.add_argument("--ellipse", type=float, nargs=2, metavar=("A", "B"))
    p.add_argument("--ngon", type=int)
    p.add_argument("--triangle", action="store_true", help="unit equilateral triangle")
    p.add_argument("--polygon", nargs="+", metavar="X,Y")
    p.add_argument("--reuleaux", type=int, metavar="K", help="polygonal Reuleaux K-gon, K odd")
    p.add_argument("--family", choices=cv.FAMILIES, default="polygons")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("ybe", parents=[common], help="Yang-Baxter operator checks")
    p.add_argument("action", choices=("report", "grid", "fuzz"))
    p.add_argument("--alpha", default="1")
    p.add_argument("--majorana", action="store_true")
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("liouville", parents=[common], help="Liouville constant tools")
    p.add_argument("action", choices=("witness", "partial", "quadratic"))
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_liouville)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.precision is None:
            args.precision = _default_precision()
        if args.precision > args.max_precision:
            raise UsageError("--precision must not exceed --max-precision")
        if args.command == "curves" and args.action == "falsify" and args.trials is None:
            args.trials = 1000
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except ExprSyntaxError as exc:
        print(f"{type(exc).__name__}: {exc.message} at byte {exc.offset}", file=sys.stderr)
    except UnknownClaim as exc:
        print(f"UnknownClaim: {exc.args[0]}", file=sys.stderr)
    except (TranscertError, ValueError, ZeroDivisionError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
