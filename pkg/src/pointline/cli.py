"""Command-line front end.

Subcommands:
  analyze    print the line/incidence statistics of a point-set file
  verify     run every inequality check against a point-set file
  generate   write a generated configuration in the JSON point format
  constants  tabulate bound-constant enclosures over a range of c

Exit codes: 0 success; 1 I/O, parse, or domain errors; 2 a verification
check failed (or the brute-force cross-check mismatched); 3 a constant
scan could not isolate its argmax at the refinement limit.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import bounds, generators
from .arrangement import Arrangement, PointSet, build_arrangement, max_lines_through_point
from .errors import PointLineError, Unresolved
from .oracle import brute_force_lines

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2
EXIT_UNRESOLVED = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; 2 is reserved for check
    # failures here, so route usage problems through the normal error path
    def error(self, message):
        raise _UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"not a rational: {text!r}") from exc


def _build_parser() -> _Parser:
    parser = _Parser(prog="pointline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="line/incidence statistics of a point-set file")
    p_analyze.add_argument("input", help="point-set JSON file")
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run the inequality checks on a point-set file")
    p_verify.add_argument("input", help="point-set JSON file")
    p_verify.add_argument("--cross-check", action="store_true",
                          help="first compare against the brute-force line oracle")
    p_verify.add_argument("--cutoff", type=int, default=bounds.DEFAULT_CUTOFF)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--suite", default=None,
                          help="comma-separated check names to run (default: all)")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("generate", help="write a generated point configuration")
    p_gen.add_argument("kind", choices=("grid", "near-pencil", "circle", "random", "collinear"))
    p_gen.add_argument("--n", type=int, help="point count (near-pencil, circle, random, collinear)")
    p_gen.add_argument("--w", type=int, help="grid width")
    p_gen.add_argument("--h", type=int, help="grid height")
    p_gen.add_argument("--seed", type=int, help="random generator seed")
    p_gen.add_argument("--bound", type=int, help="random lattice coordinate bound")
    p_gen.add_argument("--out", default=None, help="output path (default: stdout)")
    p_gen.set_defaults(func=cmd_generate)

    p_const = sub.add_parser("constants", help="tabulate bound-constant enclosures")
    p_const.add_argument("--family", choices=("wd", "few"), required=True)
    p_const.add_argument("--c-min", type=int, default=None)
    p_const.add_argument("--c-max", type=int, default=None)
    p_const.add_argument("--eps", type=_rational, default=None,
                         help="also tabulate the incidence coefficient at this eps (wd only)")
    p_const.add_argument("--cutoff", type=int, default=bounds.DEFAULT_CUTOFF)
    p_const.add_argument("--alpha", type=_rational, default=None)
    p_const.add_argument("--beta", type=_rational, default=None)
    p_const.add_argument("--format", choices=("text", "json"), default="text")
    p_const.set_defaults(func=cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except Unresolved as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    except (PointLineError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _stats_dict(descriptor: str, arr: Arrangement) -> dict:
    idx, count = max_lines_through_point(arr)
    return {
        "input": descriptor,
        "n": arr.n,
        "num_lines": arr.num_lines,
        "incidences": arr.incidences,
        "max_collinear": arr.max_collinear,
        "s": {str(i): arr.size_hist[i] for i in sorted(arr.size_hist)},
        "max_point_lines": {"index": idx, "count": count},
    }


def _print_stats_text(stats: dict) -> None:
    print(f"input: {stats['input']}")
    print(f"n: {stats['n']}")
    print(f"lines: {stats['num_lines']}")
    print(f"incidences: {stats['incidences']}")
    print(f"max_collinear: {stats['max_collinear']}")
    for i, count in stats["s"].items():
        print(f"s[{i}]: {count}")
    mpl = stats["max_point_lines"]
    print(f"max_point_lines: index={mpl['index']} count={mpl['count']}")


def cmd_analyze(args) -> int:
    ps = generators.load_points_file(args.input)
    arr = build_arrangement(ps)
    stats = _stats_dict(args.input, arr)
    if args.format == "json":
        print(json.dumps(stats, indent=1))
    else:
        _print_stats_text(stats)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def run_verify(
    ps: PointSet,
    descriptor: str = "<memory>",
    cross_check: bool = False,
    cutoff: int = bounds.DEFAULT_CUTOFF,
    suite: list[str] | None = None,
    constants: bounds.CrossingConstants = bounds.DEFAULT_CONSTANTS,
) -> tuple[int, dict]:
    """Build, optionally cross-check, and run the inequality checks.

    Returns (exit_code, report_dict); the CLI layer only formats it.
    """
    arr = build_arrangement(ps)
    report = _stats_dict(descriptor, arr)
    report["l"] = arr.max_collinear

    if cross_check:
        ours = sorted(rec.members for rec in arr.lines)
        oracle_lines = brute_force_lines(ps)
        report["cross_check"] = "ok" if ours == oracle_lines else "mismatch"
        if ours != oracle_lines:
            return EXIT_CHECK_FAILED, report

    checks = bounds.verify_theorems(arr, constants, cutoff)
    if suite:
        known = {c.name for c in checks}
        unknown = set(suite) - known
        if unknown:
            raise PointLineError(
                f"unknown check name(s) {sorted(unknown)}; available: {sorted(known)}"
            )
        checks = [c for c in checks if c.name in suite]
    report["checks"] = [
        {
            "name": c.name,
            "applicable": c.applicable,
            "relation": c.relation,
            "lhs": str(c.lhs),
            "rhs": str(c.rhs),
            "holds": c.holds,
            "note": c.note,
        }
        for c in checks
    ]
    failed = any(c.holds is False for c in checks)
    return (EXIT_CHECK_FAILED if failed else EXIT_OK), report


def _print_verify_text(report: dict) -> None:
    _print_stats_text({k: v for k, v in report.items() if k not in ("checks", "cross_check", "l")})
    if "cross_check" in report:
        print(f"cross_check: {report['cross_check']}")
    for c in report.get("checks", []):
        verdict = {True: "holds", False: "FAILED", None: "not-applicable"}[c["holds"]]
        suffix = f"  ({c['note']})" if c["note"] else ""
        print(f"{c['name']}: {c['lhs']} {c['relation']} {c['rhs']} -> {verdict}{suffix}")


def cmd_verify(args) -> int:
    ps = generators.load_points_file(args.input)
    suite = [s.strip() for s in args.suite.split(",")] if args.suite else None
    code, report = run_verify(
        ps, args.input, cross_check=args.cross_check, cutoff=args.cutoff, suite=suite
    )
    if args.format == "json":
        print(json.dumps(report, indent=1))
    else:
        _print_verify_text(report)
    return code


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def _generator_spec(args) -> generators.GeneratorSpec:
    kind = args.kind.replace("-", "_")
    required = {
        "grid": ("w", "h"),
        "near_pencil": ("n",),
        "circle": ("n",),
        "collinear": ("n",),
        "random": ("n", "seed", "bound"),
    }[kind]
    params = {}
    for name in required:
        value = getattr(args, name)
        if value is None:
            raise _UsageError(f"generator {args.kind!r} requires --{name}")
        params[name] = value
    return generators.GeneratorSpec(kind, params)


def cmd_generate(args) -> int:
    try:
        spec = _generator_spec(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    ps = spec.build()
    if args.out is None:
        generators.dump_points(ps, sys.stdout)
    else:
        generators.save_points_file(ps, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def _crossing_constants(args) -> bounds.CrossingConstants:
    defaults = bounds.DEFAULT_CONSTANTS
    return bounds.CrossingConstants(
        alpha=args.alpha if args.alpha is not None else defaults.alpha,
        beta=args.beta if args.beta is not None else defaults.beta,
    )


_ENCLOSURE_DIGITS = 15


def _enclosure_strs(iv: bounds.Interval) -> tuple[str, str]:
    """Outward-round an enclosure to printable exact rationals.

    Series enclosures carry partial sums whose reduced numerators run to
    thousands of digits; printing them verbatim is useless (and trips the
    int-to-str conversion limit).  Rounding lo down and hi up to 15
    decimal digits keeps the pair a true enclosure, far finer than any
    enclosure width that matters here.
    """
    scale = 10**_ENCLOSURE_DIGITS
    lo = Fraction(math.floor(iv.lo * scale), scale)
    hi = Fraction(math.ceil(iv.hi * scale), scale)
    return str(lo), str(hi)


def cmd_constants(args) -> int:
    k = _crossing_constants(args)
    if args.family == "wd":
        c_min = args.c_min if args.c_min is not None else 8
        c_max = args.c_max if args.c_max is not None else 200
        scan = bounds.scan_constants_wd(c_min, c_max, k, cutoff=args.cutoff)
        # one shared suffix pass so the per-c delta column stays cheap
        tails = (
            bounds._suffix_tail_table("(i+1)/i^3", c_min, c_max, scan.cutoff)
            if args.eps is not None
            else None
        )
        rows = []
        for c, f_iv in scan.table:
            h = bounds._wd_h(c)
            f_lo, f_hi = _enclosure_strs(f_iv)
            row = {
                "c": c,
                "h": str(h),
                "x": str((h + 1) / 2),
                "y": str(c - 5 * h - 2 + 18 * h / (c + 1)),
                "f_lo": f_lo,
                "f_hi": f_hi,
            }
            if tails is not None:
                delta = bounds._wd_delta_from_series(c, args.eps, tails[c], k)
                row["delta_lo"], row["delta_hi"] = _enclosure_strs(delta)
            rows.append(row)
    else:
        c_min = args.c_min if args.c_min is not None else 29
        c_max = args.c_max if args.c_max is not None else 200
        scan = bounds.scan_constants_few(c_min, c_max, k, cutoff=args.cutoff)
        tails = bounds._suffix_tail_table("1/i^2", c_min, c_max, scan.cutoff)
        rows = []
        for c, eps_iv in scan.table:
            a = bounds._few_a_from_series(c, tails[c], k)
            b = Fraction(2 * c - 8) * k.alpha / (c * c + 3 * c - 18)
            a_lo, a_hi = _enclosure_strs(a)
            eps_lo, eps_hi = _enclosure_strs(eps_iv)
            rows.append(
                {
                    "c": c,
                    "h": str(Fraction(c * c - c - 2, 4 * c - 16)),
                    "x": str(Fraction(c * c + 3 * c - 18, 4 * c - 16)),
                    "b": str(b),
                    "a_lo": a_lo,
                    "a_hi": a_hi,
                    "eps_lo": eps_lo,
                    "eps_hi": eps_hi,
                }
            )
    result = {
        "family": args.family,
        "alpha": str(k.alpha),
        "beta": str(k.beta),
        "cutoff": scan.cutoff,
        "argmax_c": scan.argmax_c,
        "rows": rows,
    }
    if args.format == "json":
        print(json.dumps(result, indent=1))
    else:
        print(f"family: {args.family}  alpha: {k.alpha}  beta: {k.beta}  cutoff: {scan.cutoff}")
        for row in rows:
            print("  ".join(f"{key}={value}" for key, value in row.items()))
        print(f"argmax_c: {scan.argmax_c}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
