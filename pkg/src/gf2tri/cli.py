"""Command-line front door: field setup, single-instance solving, censuses,
and the verification suites, with one JSON document per invocation.

Field elements are hex on both sides; arrays are sorted ascending by bit
pattern, key order is fixed, so reports diff cleanly.  Every flag can also
be set through an environment variable with the GF2TRI_ prefix
(e.g. GF2TRI_THREADS=4).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import _scan, affine, dobbertin, linearized, oracle, psolver, verify
from .errors import Gf2TriError
from .field import FieldCtx, SubfieldParams, fe_to_hex, make_field
from .tower import ExtContext

ENV_PREFIX = "GF2TRI_"


def _env(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return fallback
    return cast(raw)


def _hex_list(xs) -> list[str]:
    return [fe_to_hex(x) for x in sorted(xs)]


def _field_from_args(args) -> FieldCtx:
    poly = int(args.poly, 16) if args.poly else None
    return make_field(args.k, poly)


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        for key, val in report.items():
            print(f"{key}: {val}")


# ------------------------------------------------------------------
# Subcommand handlers
# ------------------------------------------------------------------

def _cmd_field_info(args) -> tuple[int, dict]:
    ctx = _field_from_args(args)
    return 0, {
        "field": ctx.spec,
        "k": ctx.k,
        "modulus": fe_to_hex(ctx.modulus),
        "order": ctx.order,
        "generator": fe_to_hex(ctx.generator),
        "tables": ctx.tables is not None,
        "scan_backend": _scan.BACKEND,
    }


def _cmd_solve_p(args) -> tuple[int, dict]:
    ctx = _field_from_args(args)
    a = ctx.parse_element(args.a)
    params = SubfieldParams.for_exponent(ctx, args.l)
    cls = psolver.classify(ctx, a, args.l)
    roots = psolver.solve(ctx, a, args.l)
    for r in roots:  # round-trip before printing
        assert ctx.mul(ctx.frob(r, args.l), r) ^ r ^ a == 0
    return 0, {
        "field": ctx.spec,
        "l": args.l,
        "d": params.d,
        "n": params.n,
        "a": fe_to_hex(a),
        "class": cls.cls.value,
        "roots": _hex_list(roots),
        "Z": fe_to_hex(cls.z_val),
        "C": fe_to_hex(cls.c_val),
        "trace_bit": None if cls.trace_bit is None else fe_to_hex(cls.trace_bit),
        "gcd1_trace": cls.gcd1_trace,
        "provenance": roots.provenance,
    }


def _cmd_solve_f(args) -> tuple[int, dict]:
    ctx = _field_from_args(args)
    a = ctx.parse_element(args.a)
    c = ctx.parse_element(args.c)
    params = SubfieldParams.for_exponent(ctx, args.l)
    sol = affine.solve_f(ctx, a, c, args.l)
    return 0, {
        "field": ctx.spec,
        "l": args.l,
        "d": params.d,
        "n": params.n,
        "a": fe_to_hex(a),
        "c": fe_to_hex(c),
        "arity": sol.arity,
        "roots": _hex_list(sol.roots),
        "trace_class": fe_to_hex(sol.trace_class),
        "provenance": sol.roots.provenance,
    }


def _cmd_solve_q(args) -> tuple[int, dict]:
    ctx = _field_from_args(args)
    tw = ExtContext(ctx)
    a = ctx.parse_element(args.a)
    r = tw.ext.parse_element(args.r)
    pred = linearized.classify_q(tw, a, r, args.l)
    kernel = linearized.q_kernel(tw, a, r, args.l)
    return 0, {
        "field": ctx.spec,
        "ext_field": tw.ext.spec,
        "l": args.l,
        "a": fe_to_hex(a),
        "r": fe_to_hex(r),
        "kernel_size": len(kernel),
        "predicted_kernel": pred.kernel_size,
        "match": len(kernel) == pred.kernel_size,
        "r_is_power": pred.r_is_power,
        "f_zeros": pred.f_zero_count,
        "Y": None if pred.y_val is None else fe_to_hex(pred.y_val),
        "roots": _hex_list(kernel),
    }


def _cmd_census(args) -> tuple[int, dict]:
    ctx = _field_from_args(args)
    t0 = time.perf_counter()
    if args.family in ("p", "f"):
        c = ctx.parse_element(args.c)
        rep = oracle.census(ctx, args.family, args.l, c=c, threads=args.threads)
        crit = (psolver.distribution(ctx, args.l) if args.family == "p"
                else affine.f_census(ctx, args.l))
        report = {
            "family": args.family,
            "field": ctx.spec,
            "l": args.l,
            "observed": {str(key): v for key, v in sorted(rep.counts.items())},
            "predicted": {str(key): v for key, v in sorted(rep.predicted.items())},
            "match": rep.match and crit.counts == rep.counts,
        }
    elif args.family == "q":
        tw = ExtContext(ctx)
        r = tw.ext.parse_element(args.r) if args.r else 1
        counts: dict[int, int] = {}
        bad = 0
        for a in range(1, ctx.order):
            pred = linearized.classify_q(tw, a, r, args.l)
            counts[pred.kernel_size] = counts.get(pred.kernel_size, 0) + 1
            got = len(oracle.kernel_q(tw, a, r, args.l).roots)
            bad += got != pred.kernel_size
        report = {
            "family": "q",
            "field": ctx.spec,
            "l": args.l,
            "r": fe_to_hex(r),
            "observed": {str(key): v for key, v in sorted(counts.items())},
            "match": bad == 0,
        }
    else:
        raise Gf2TriError(f"unknown family {args.family!r}")
    report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    return (0 if report["match"] else 1), report


def _cmd_dobbertin(args) -> tuple[int, dict]:
    ctx = _field_from_args(args)
    lp = dobbertin.l_inverse(ctx, args.l)
    eps = args.eps if args.eps is not None else (lp + 1) & 1
    report: dict = {
        "field": ctx.spec,
        "l": args.l,
        "l_prime": lp,
        "eps": eps,
        "e": [dobbertin.e_exp(ctx, i, args.l) for i in range(1, lp + 1)],
    }
    if args.a:
        a = ctx.parse_element(args.a)
        report["a"] = fe_to_hex(a)
        report["R"] = fe_to_hex(dobbertin.R_eval(ctx, a, args.l))
        report["q"] = fe_to_hex(dobbertin.q_eval(ctx, a, args.l, eps)) if a else None
        report["H"] = [fe_to_hex(dobbertin.H_eval(ctx, i, a, args.l))
                       for i in range(1, lp + 1)]
        return 0, report
    qm = dobbertin.multiset_image(ctx, args.l, "q", f"T{ctx.k & 1}", lp & 1)
    vm = dobbertin.multiset_image(ctx, args.l, "V", "T0")
    report["q_vs_V_multisets_equal"] = qm == vm
    report["q_three_to_one"] = all(m == 3 for m in qm.values())
    if ctx.k % 2 == 1:
        q0 = dobbertin.multiset_image(ctx, args.l, "q", "T0", 0)
        report["q0_vs_V_T1_equal"] = q0 == dobbertin.multiset_image(ctx, args.l, "V", "T1")
        report["q0_injective"] = all(m == 1 for m in q0.values())
    return 0, report


def _cmd_verify(args) -> tuple[int, dict]:
    names = args.suites.split(",") if args.suites else None
    if names:
        unknown = [s for s in names if s not in verify.SUITES]
        if unknown:
            raise Gf2TriError(f"unknown suites: {', '.join(unknown)}")
    t0 = time.perf_counter()
    report = verify.run_suites(names, max_k=args.max_k, threads=args.threads,
                               budget_s=args.budget_s)
    report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    report["scan_backend"] = _scan.BACKEND
    return (0 if report["ok"] else 1), report


# ------------------------------------------------------------------
# Parser
# ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2tri",
        description="Zero counts and roots of x^(2^l+1)+x+a and its companions over GF(2^k)",
    )
    parser.add_argument("--json", action=argparse.BooleanOptionalAction,
                        default=_env("json", lambda s: s != "0", True),
                        help="emit one JSON document (default)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_args(p, need_l=True):
        p.add_argument("--k", type=int, required=_env("k", int, None) is None,
                       default=_env("k", int, None))
        p.add_argument("--poly", type=str, default=_env("poly", str, None),
                       help="field modulus as 0xHEX (default: smallest irreducible)")
        if need_l:
            p.add_argument("--l", type=int, required=_env("l", int, None) is None,
                           default=_env("l", int, None))

    p = sub.add_parser("field-info", help="describe a field")
    add_field_args(p, need_l=False)
    p.set_defaults(func=_cmd_field_info)

    p = sub.add_parser("solve-p", help="classify and solve x^(2^l+1)+x+a")
    add_field_args(p)
    p.add_argument("--a", type=str, required=True)
    p.set_defaults(func=_cmd_solve_p)

    p = sub.add_parser("solve-f", help="solve the affine companion with constant c")
    add_field_args(p)
    p.add_argument("--a", type=str, required=True)
    p.add_argument("--c", type=str, default="0x1")
    p.set_defaults(func=_cmd_solve_f)

    p = sub.add_parser("solve-q", help="kernel of the linearized form over GF(2^2k)")
    add_field_args(p)
    p.add_argument("--a", type=str, required=True)
    p.add_argument("--r", type=str, required=True, help="unit-circle element of GF(2^2k)")
    p.set_defaults(func=_cmd_solve_q)

    p = sub.add_parser("census", help="zero-count distribution over all a != 0")
    add_field_args(p)
    p.add_argument("--family", choices=["p", "f", "q"], required=True)
    p.add_argument("--c", type=str, default="0x1")
    p.add_argument("--r", type=str, default=None)
    p.add_argument("--threads", type=int, default=_env("threads", int, 1))
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("dobbertin", help="R/q/H values, or the multiset report")
    add_field_args(p)
    p.add_argument("--a", type=str, default=None)
    p.add_argument("--eps", type=int, choices=[0, 1], default=None)
    p.set_defaults(func=_cmd_dobbertin)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--max-k", type=int, default=_env("max_k", int, 10),
                   help="grid ceiling, clipped per suite (default 10)")
    p.add_argument("--threads", type=int, default=_env("threads", int, 1))
    p.add_argument("--suites", type=str, default=None,
                   help=f"comma-separated subset of: {', '.join(verify.SUITES)}")
    p.add_argument("--budget-s", type=float, default=_env("budget_s", float, None),
                   help="soft wall-clock budget; suites past it are skipped")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.func(args)
    except Gf2TriError as exc:
        print(f"gf2tri: error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
