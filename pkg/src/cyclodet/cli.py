"""Batch command-line front end.

Subcommands:
  verify  run identity verifiers over a range of n and emit a report
  det     print one exact determinant
  bench   time the derangement-sum oracle against elimination

Exit codes: 0 success, 1 a verification failed, 2 usage or guardrail error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .combinatorics import GuardrailExceeded, derangement_count, signed_derangement_sum
from .identities import (
    IDENTITIES,
    MatrixKind,
    build_matrix,
    run_identity,
    value_str,
)
from .cyclotomic import shared_context
from .rationals import parse_rational

REPORT_FIELDS = ("identity", "n", "params", "expected", "computed",
                 "passed", "elapsed_seconds", "tool_version")

_DET_KINDS = {
    "a": MatrixKind.A,
    "b": MatrixKind.B,
    "c": MatrixKind.C_HOLLOW,
    "c1": MatrixKind.C_PLUS_I,
    "tilde-a": MatrixKind.TILDE_A,
    "s19": MatrixKind.S19,
}


class UsageError(Exception):
    pass


def _parse_n_range(text: str) -> tuple[int, int]:
    lo, dots, hi = text.partition("..")
    try:
        if dots:
            a, b = int(lo), int(hi)
        else:
            a = b = int(lo)
    except ValueError:
        raise UsageError(f"bad n range {text!r}; expected N or A..B") from None
    if a > b:
        raise UsageError(f"empty n range {text!r}")
    return a, b


def _grid_for(info, n_range) -> list[int]:
    if n_range is None:
        return list(info.default_grid)
    a, b = n_range
    grid = [n for n in range(a, b + 1)
            if not info.odd_only or n % 2 == 1]
    if info.odd_only:
        grid = [n for n in grid if n >= 3]
    else:
        grid = [n for n in grid if n >= 2]
    if not grid:
        raise UsageError(f"n range {a}..{b} leaves no admissible n")
    return grid


def _run_task(task):
    name, n, oracle, force = task
    return run_identity(name, n, oracle=oracle, force=force)


def _dict_with_version(report) -> dict:
    d = report.as_dict()
    d["tool_version"] = __version__
    return d


def _emit_reports(reports, fmt: str, out_path):
    if fmt == "text":
        lines = [_text_line(r) for r in reports]
        passed = sum(r.passed for r in reports)
        lines.append(f"summary: total={len(reports)} passed={passed} "
                     f"failed={len(reports) - passed}")
        payload = "\n".join(lines) + "\n"
    elif fmt == "json":
        passed = sum(r.passed for r in reports)
        doc = {
            "reports": [_dict_with_version(r) for r in reports],
            "summary": {"total": len(reports), "passed": passed,
                        "failed": len(reports) - passed},
        }
        payload = json.dumps(doc, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(REPORT_FIELDS)
        for r in reports:
            d = _dict_with_version(r)
            writer.writerow([
                d["identity"], d["n"], json.dumps(d["params"], sort_keys=True),
                d["expected"], d["computed"],
                "true" if d["passed"] else "false",
                repr(d["elapsed_seconds"]), d["tool_version"],
            ])
        payload = buf.getvalue()
    else:
        raise UsageError(f"unknown format {fmt!r}")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _text_line(r) -> str:
    verdict = "PASS" if r.passed else "FAIL"
    detail = f"expected {r.expected}" if r.passed else \
        f"expected {r.expected} | computed {r.computed}"
    return f"{verdict} {r.identity} n={r.n} {detail} ({r.elapsed_seconds:.3f}s)"


def cmd_verify(args) -> int:
    if args.identity == "all":
        names = list(IDENTITIES)
    elif args.identity in IDENTITIES:
        names = [args.identity]
    else:
        raise UsageError(
            f"unknown identity {args.identity!r}; known: all, " + ", ".join(IDENTITIES))
    n_range = _parse_n_range(args.n) if args.n else None
    tasks = []
    for name in names:
        info = IDENTITIES[name]
        for n in _grid_for(info, n_range):
            tasks.append((name, n, args.oracle and info.supports_oracle, args.force))
    tasks.sort(key=lambda t: (t[0], t[1]))
    jobs = args.jobs if args.jobs > 0 else min(os.cpu_count() or 1, 8)
    reports = []
    stream = sys.stderr if args.format != "text" or args.out else sys.stdout
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for report in pool.map(_run_task, tasks):
                reports.append(report)
                print(_text_line(report), file=stream, flush=True)
    else:
        for task in tasks:
            report = _run_task(task)
            reports.append(report)
            print(_text_line(report), file=stream, flush=True)
    reports.sort(key=lambda r: (r.identity, r.n))
    if args.format != "text" or args.out:
        _emit_reports(reports, args.format, args.out)
    else:
        passed = sum(r.passed for r in reports)
        print(f"summary: total={len(reports)} passed={passed} "
              f"failed={len(reports) - passed}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_det(args) -> int:
    kind = _DET_KINDS.get(args.matrix)
    if kind is None:
        raise UsageError(f"unknown matrix kind {args.matrix!r}; "
                         "known: " + ", ".join(_DET_KINDS))
    if args.n < 2:
        raise UsageError("n must be at least 2")
    try:
        x = parse_rational(args.x) if args.x is not None else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ctx = shared_context(args.n)
    try:
        matrix = build_matrix(kind, ctx, args.n - 1)
    except ZeroDivisionError:
        raise UsageError(
            f"matrix kind {args.matrix!r} is undefined for n={args.n}") from None
    if x is not None:
        matrix = matrix.add_scalar(x)
    print(value_str(matrix.det()))
    return 0


def cmd_bench(args) -> int:
    n = args.n
    if n < 3 or n % 2 == 0:
        raise UsageError("bench requires odd n >= 3")
    m = n - 1
    if m > 10 and not args.force:
        raise UsageError(
            f"dimension {m} exceeds the derangement guardrail (10); "
            "pass --force to override")
    ctx = shared_context(n)
    matrix = build_matrix(MatrixKind.A, ctx, m)
    terms = derangement_count(m)
    t0 = time.perf_counter()
    oracle_value = signed_derangement_sum(matrix, force=args.force)
    t_oracle = time.perf_counter() - t0
    t0 = time.perf_counter()
    det_value = matrix.det()
    t_det = time.perf_counter() - t0
    agree = oracle_value == det_value
    ratio = t_oracle / t_det if t_det > 0 else float("inf")
    print(f"n={n} dimension={m} derangement terms={terms}")
    print(f"derangement sum: {value_str(oracle_value)} in {t_oracle:.6f}s")
    print(f"elimination det: {value_str(det_value)} in {t_det:.6f}s")
    print(f"values {'agree' if agree else 'DISAGREE'}; speedup x{ratio:.1f}")
    return 0 if agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclodet",
        description="Exact verification of root-of-unity matrix identities.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity verifiers over a range of n")
    p_verify.add_argument("--identity", required=True,
                          help="identity name or 'all'")
    p_verify.add_argument("--n", default=None,
                          help="inclusive range a..b (or single N); "
                               "defaults to the identity's acceptance grid")
    p_verify.add_argument("--oracle", action="store_true",
                          help="also run derangement-sum cross-checks where supported")
    p_verify.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_verify.add_argument("--out", default=None, help="write the report to a file")
    p_verify.add_argument("--force", action="store_true",
                          help="override factorial-cost guardrails")
    p_verify.add_argument("--jobs", type=int, default=0,
                          help="worker processes; 0 = one per CPU core "
                               "(capped at 8), 1 = serial")
    p_verify.set_defaults(func=cmd_verify)

    p_det = sub.add_parser("det", help="print one exact determinant")
    p_det.add_argument("--matrix", required=True,
                       help="matrix kind: " + "|".join(_DET_KINDS))
    p_det.add_argument("--n", type=int, required=True)
    p_det.add_argument("--x", default=None,
                       help="rational shift added to every entry (p/q)")
    p_det.set_defaults(func=cmd_det)

    p_bench = sub.add_parser("bench",
                             help="time derangement-sum oracle vs elimination")
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--force", action="store_true")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GuardrailExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
