"""Command-line surface: every operation, one JSON envelope per invocation.

Envelopes carry schema_version "1" and are the scripting contract; table mode
is a formatting layer over the same payload. Exit codes: 0 success, 1 usage
or domain error, 2 when a claims run contradicts an expected-PASS verdict,
3 on internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .claims import ClaimRanges, REGISTRY, run_all, run_claim, surprise_claims
from .counting import strong_bound_witness, xi_formula, xi_lower_bound, xi_pq
from .errors import InvariantViolation
from .generalized import (
    GenParams,
    NoDivisibilityDivergence,
    Unknown,
    divisibility_reachable,
    gen_classify,
    gen_sub_trajectory,
)
from .orbits import burnside_count, permutation_cycles
from .trajectory import (
    Diverges,
    Loops,
    Params,
    classify,
    iterate,
    sub_trajectory,
)

SCHEMA_VERSION = "1"
MAX_INPUT = 2**63 - 1
CAP_ENV_VAR = "ADDCOLLATZ_CAP"

CSV_COLUMNS = (
    "a", "d", "delta", "coprime", "xi_formula",
    "orbit_count", "burnside", "loop_count", "agree",
)


def _checked_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value > MAX_INPUT:
        raise argparse.ArgumentTypeError(
            f"{value} exceeds the supported input width (2^63 - 1)"
        )
    return value


def _span(text: str) -> tuple[int, int]:
    """Parse 'lo..hi' (or a single value) into an inclusive range."""
    lo, _, hi = text.partition("..")
    hi = hi or lo
    lo, hi = _checked_int(lo), _checked_int(hi)
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need 1 <= lo <= hi")
    return lo, hi


def _cap_from(args) -> int | None:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return _checked_int(env)
        except argparse.ArgumentTypeError as exc:
            raise ValueError(f"bad {CAP_ENV_VAR}: {exc}")
    return None


def _verdict_dict(verdict) -> dict:
    if isinstance(verdict, Loops):
        return {
            "kind": "loops",
            "preperiod_length": verdict.preperiod_length,
            "cycle": list(verdict.cycle),
        }
    if isinstance(verdict, Diverges):
        return {
            "kind": "diverges",
            "steps_to_certificate": verdict.steps_to_certificate,
            "witness_value": verdict.witness_value,
        }
    if isinstance(verdict, NoDivisibilityDivergence):
        return {
            "kind": "no_divisibility_divergence",
            "witness_residue": verdict.witness_residue,
        }
    if isinstance(verdict, Unknown):
        return {"kind": "unknown", "steps_executed": verdict.steps_executed}
    raise InvariantViolation(f"unrenderable verdict {verdict!r}")


# ---------------------------------------------------------------------------
# command handlers: each returns (parameters, result, exit_code)

def _cmd_traj(args):
    values = iterate(Params(args.a, args.d), args.x, args.steps)
    params = {"a": args.a, "d": args.d, "x": args.x, "steps": args.steps}
    return params, {"values": values}, 0


def _cmd_classify(args):
    cap = _cap_from(args)
    verdict = classify(Params(args.a, args.d), args.x, cap=cap)
    params = {"a": args.a, "d": args.d, "x": args.x, "cap": cap}
    return params, _verdict_dict(verdict), 0


def _cmd_subtraj(args):
    records = sub_trajectory(Params(args.a, args.d), args.x, args.count)
    params = {"a": args.a, "d": args.d, "x": args.x, "count": args.count}
    rows = [
        {"index": r.index, "step_index": r.step_index, "value": r.value, "y": r.y}
        for r in records
    ]
    return params, {"records": rows}, 0


def _cmd_orbits(args):
    partition = permutation_cycles(args.a, args.d)
    params = {"a": args.a, "d": args.d}
    result = {
        "modulus": partition.modulus,
        "multiplier": partition.multiplier,
        "orbit_count": partition.orbit_count,
        "orbits": [list(orbit) for orbit in partition.orbits],
    }
    return params, result, 0


def _cmd_count(args):
    params = {"a": args.a, "d": args.d, "method": args.method}
    result: dict = {}
    if args.method in ("formula", "all"):
        breakdown = xi_formula(args.a, args.d)
        result["formula"] = breakdown.total
        result["terms"] = [
            {"divisor": t.divisor, "phi": t.phi, "alpha": t.alpha, "term": t.term}
            for t in breakdown.terms
        ]
    if args.method in ("burnside", "all"):
        result["burnside"] = burnside_count(args.a, args.d)
    if args.method in ("brute", "all"):
        result["brute"] = permutation_cycles(args.a, args.d).orbit_count
    if args.method == "all":
        if not result["formula"] == result["burnside"] == result["brute"]:
            raise InvariantViolation(
                f"orbit counts disagree for (a={args.a}, d={args.d}): "
                f"formula={result['formula']} burnside={result['burnside']} "
                f"brute={result['brute']}"
            )
        result["agree"] = True
    return params, result, 0


def _cmd_bounds(args):
    params = {"a": args.a}
    result = {
        "lower": xi_lower_bound(args.a),
        "upper": args.a,
        "witness_d": strong_bound_witness(args.a),
    }
    return params, result, 0


def _cmd_pq(args):
    closed = xi_pq(args.p, args.q, args.d)
    direct = xi_formula(args.p * args.q, args.d).total
    params = {"p": args.p, "q": args.q, "d": args.d}
    return params, {"xi_pq": closed, "cross_check": direct, "agree": closed == direct}, 0


def _cmd_gen(args):
    cap = _cap_from(args)
    verdict = gen_classify(GenParams(args.a, args.d, args.m), args.x, cap=cap)
    params = {"a": args.a, "d": args.d, "m": args.m, "x": args.x, "cap": cap}
    return params, _verdict_dict(verdict), 0


def _cmd_gen_subtraj(args):
    records = gen_sub_trajectory(GenParams(args.a, args.d, args.m), args.x, args.count)
    params = {"a": args.a, "d": args.d, "m": args.m, "x": args.x, "count": args.count}
    rows = [
        {"index": r.index, "value": r.value, "run_length": r.run_length}
        for r in records
    ]
    return params, {"records": rows}, 0


def _cmd_gen_reach(args):
    r = divisibility_reachable(GenParams(args.a, args.d, args.m), args.x)
    params = {"a": args.a, "d": args.d, "m": args.m, "x": args.x}
    return params, {"reachable": r is not None, "r": r}, 0


def _cmd_claims(args):
    ranges = ClaimRanges(a_max=args.a_max, d_max=args.d_max, x_max=args.x_max)
    if args.claim is not None:
        reports = [run_claim(args.claim, ranges, args.ce_limit)]
    else:
        reports = run_all(ranges, args.ce_limit)
    surprises = surprise_claims(reports)
    params = {
        "claim": args.claim,
        "a_max": args.a_max,
        "d_max": args.d_max,
        "x_max": args.x_max,
        "ce_limit": args.ce_limit,
    }
    result = {"reports": [rep.to_dict() for rep in reports], "surprises": surprises}
    return params, result, 2 if surprises else 0


def _scan_row(pair: tuple[int, int]) -> dict:
    a, d = pair
    delta = math.gcd(a, d)
    coprime = delta == 1
    cycles = set()
    params = Params(a, d)
    for x in range(1, a + 1):
        verdict = classify(params, x)
        if isinstance(verdict, Loops):
            cycles.add(verdict.cycle)
    row = {
        "a": a, "d": d, "delta": delta, "coprime": coprime,
        "xi_formula": None, "orbit_count": None, "burnside": None,
        "loop_count": len(cycles), "agree": None,
    }
    if coprime:
        row["xi_formula"] = xi_formula(a, d).total
        row["orbit_count"] = permutation_cycles(a, d).orbit_count
        row["burnside"] = burnside_count(a, d)
        row["agree"] = (
            row["xi_formula"] == row["orbit_count"]
            == row["burnside"] == row["loop_count"]
        )
    return row


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_scan(args):
    if args.jobs < 1:
        raise ValueError(f"--jobs must be at least 1, got {args.jobs}")
    a_lo, a_hi = args.a
    d_lo, d_hi = args.d
    grid = [
        (a, d)
        for a in range(a_lo, a_hi + 1)
        for d in range(d_lo, d_hi + 1)
        if not args.coprime_only or math.gcd(a, d) == 1
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_row, grid, chunksize=64))
    else:
        rows = [_scan_row(pair) for pair in grid]
    rows.sort(key=lambda row: (row["a"], row["d"]))

    if args.format == "csv":
        with open(args.out, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_COLUMNS)
            for row in rows:
                writer.writerow([_csv_cell(row[c]) for c in CSV_COLUMNS])
    else:
        with open(args.out, "w") as handle:
            json.dump(rows, handle, indent=1)
            handle.write("\n")

    params = {
        "a": [a_lo, a_hi],
        "d": [d_lo, d_hi],
        "coprime_only": args.coprime_only,
        "out": args.out,
        "format": args.format,
        "jobs": args.jobs,
    }
    return params, {"rows": len(rows), "out": args.out, "format": args.format}, 0


# ---------------------------------------------------------------------------
# rendering

def _table_rows(rows: list[dict]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    widths = {
        c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) for c in columns
    }
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    for row in rows:
        lines.append("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns))
    return lines


def _render_block(key: str, value, depth: int) -> list[str]:
    pad = "  " * depth
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"]
        for k, v in value.items():
            lines.extend(_render_block(k, v, depth + 1))
        return lines
    if isinstance(value, list) and value and all(isinstance(e, dict) for e in value):
        inner_pad = "  " * (depth + 1)
        return [f"{pad}{key}:"] + [inner_pad + ln for ln in _table_rows(value)]
    return [f"{pad}{key}: {value}"]


def _render_claims(result: dict) -> str:
    lines = []
    for rep in result["reports"]:
        shown = len(rep["counterexamples"])
        total = rep["counterexample_total"]
        suffix = "" if rep["verdict"] == "PASS" else f"  ({total} counterexamples, showing {shown})"
        lines.append(f"{rep['claim_id']:13s} {rep['verdict']:16s} checked={rep['checked_count']}{suffix}")
        lines.append(f"    claim:  {rep['statement']}")
        lines.append(f"    ranges: {rep['range_description']}")
        if rep["counterexamples"]:
            lines.extend("    " + ln for ln in _table_rows(rep["counterexamples"]))
        lines.append("")
    if result["surprises"]:
        lines.append(f"UNEXPECTED counterexamples in: {', '.join(result['surprises'])}")
    else:
        lines.append("all verdicts match expectations")
    return "\n".join(lines)


def _render_table(envelope: dict) -> str:
    if envelope["command"] == "claims":
        body = _render_claims(envelope["result"])
    else:
        body = "\n".join(_render_block("result", envelope["result"], 0))
    params = ", ".join(f"{k}={v}" for k, v in envelope["parameters"].items())
    return (
        f"command: {envelope['command']}\n"
        f"parameters: {params}\n"
        f"{body}\n"
        f"elapsed_ms: {envelope['elapsed_ms']}"
    )


# ---------------------------------------------------------------------------
# parser

def _add_format(sub, default="json"):
    sub.add_argument("--format", choices=("json", "table"), default=default,
                     help="envelope rendering (default %(default)s)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addcollatz",
        description=(
            "Additive Collatz trajectories: iteration, certified loop/divergence "
            "classification, orbit counting, and a claims harness. Loop counting "
            "over start values is meaningful for d >= 2; d = 1 makes the map the "
            "identity and every start its own one-cycle."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("traj", help="iterate the map")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("x", type=_checked_int)
    p.add_argument("--steps", type=_checked_int, default=20)
    _add_format(p)
    p.set_defaults(handler=_cmd_traj)

    p = subs.add_parser("classify", help="loop or divergence verdict with certificate")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("x", type=_checked_int)
    p.add_argument("--cap", type=_checked_int, default=None,
                   help=f"iteration cap (default 10^7; {CAP_ENV_VAR} overrides)")
    _add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = subs.add_parser("subtraj", help="division-output records (z_i, n_i, y_i)")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("x", type=_checked_int)
    p.add_argument("--count", type=_checked_int, default=10)
    _add_format(p)
    p.set_defaults(handler=_cmd_subtraj)

    p = subs.add_parser("orbits", help="orbits of multiplication by d on Z/aZ")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    _add_format(p)
    p.set_defaults(handler=_cmd_orbits)

    p = subs.add_parser("count", help="loop count xi(a, d)")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("--method", choices=("formula", "burnside", "brute", "all"),
                   default="formula")
    _add_format(p)
    p.set_defaults(handler=_cmd_count)

    p = subs.add_parser("bounds", help="xi_inf(a), upper bound a, attaining d")
    p.add_argument("a", type=_checked_int)
    _add_format(p)
    p.set_defaults(handler=_cmd_bounds)

    p = subs.add_parser("pq", help="two-prime closed form with cross-check")
    p.add_argument("p", type=_checked_int)
    p.add_argument("q", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    _add_format(p)
    p.set_defaults(handler=_cmd_pq)

    p = subs.add_parser("gen", help="classify under x -> m*x + a / x -> x/d")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("m", type=_checked_int)
    p.add_argument("x", type=_checked_int)
    p.add_argument("--cap", type=_checked_int, default=None,
                   help=f"iteration cap (default 10^5; {CAP_ENV_VAR} overrides)")
    _add_format(p)
    p.set_defaults(handler=_cmd_gen)

    p = subs.add_parser("gen-subtraj", help="division outputs with run lengths")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("m", type=_checked_int)
    p.add_argument("x", type=_checked_int)
    p.add_argument("--count", type=_checked_int, default=10)
    _add_format(p)
    p.set_defaults(handler=_cmd_gen_subtraj)

    p = subs.add_parser("gen-reach", help="least r making a multiple of d reachable")
    p.add_argument("a", type=_checked_int)
    p.add_argument("d", type=_checked_int)
    p.add_argument("m", type=_checked_int)
    p.add_argument("x", type=_checked_int)
    _add_format(p)
    p.set_defaults(handler=_cmd_gen_reach)

    p = subs.add_parser("claims", help="evaluate registered claims over a grid")
    p.add_argument("--claim", choices=tuple(REGISTRY), default=None,
                   help="run a single claim instead of all of them")
    p.add_argument("--a-max", type=_checked_int, default=ClaimRanges.a_max)
    p.add_argument("--d-max", type=_checked_int, default=ClaimRanges.d_max)
    p.add_argument("--x-max", type=_checked_int, default=ClaimRanges.x_max)
    p.add_argument("--ce-limit", type=_checked_int, default=10,
                   help="counterexamples kept per claim (default %(default)s)")
    _add_format(p)
    p.set_defaults(handler=_cmd_claims)

    p = subs.add_parser("scan", help="sweep an (a, d) grid into a CSV/JSON report")
    p.add_argument("--a", type=_span, required=True, metavar="LO..HI")
    p.add_argument("--d", type=_span, required=True, metavar="LO..HI")
    p.add_argument("--coprime-only", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="report file format (default %(default)s)")
    p.add_argument("--jobs", type=_checked_int, default=1,
                   help="worker processes (default %(default)s)")
    p.set_defaults(handler=_cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1

    started = time.perf_counter()
    try:
        parameters, result, exit_code = args.handler(args)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "parameters": parameters,
        "result": result,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    if getattr(args, "format", "json") == "table" and args.command != "scan":
        print(_render_table(envelope))
    else:
        print(json.dumps(envelope))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
