"""Command-line interface: bounds, spectrum, construct, verify, sweep.

Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
3 budget refusal.  All rationals are serialized as exact "p/q" strings
(plain integers when the denominator is 1) and re-parse to the identical
value; output files are written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import ceil, floor, inf

from .bounds import BoundReport, build_bound_report
from .codes import LinearCode, codewords, min_distance, read_pchk, write_pchk
from .combinat import GraphParams
from .descent import run_algorithm1
from .errors import BudgetError, PchkFormatError
from .spectrum import build_spectrum_level0

__all__ = ["main"]

log = logging.getLogger("gvgraph")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SWEEP_FIELDS = [
    "q",
    "n",
    "d",
    "status",
    "degenerate",
    "lambda_min",
    "gv",
    "gv_ceil",
    "wilf_cor27",
    "wilf_cor27_ceil",
    "hoffman_upper",
    "hoffman_upper_floor",
    "hoffman_paper_literal",
    "descent_bounds",
    "descent_final",
    "descent_final_ceil",
    "constructed_code_size",
    "s",
    "asymptotic_rate",
    "runtime_seconds",
]


def _frac_str(value: Fraction | None) -> str | None:
    return None if value is None else str(value)


def _atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gvgraph-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        _atomic_write_text(output, text)


def _report_dict(report: BoundReport) -> dict:
    params = report.params
    descent = report.descent_bounds
    final = descent[-1] if descent else None
    return {
        "q": params.q,
        "n": params.n,
        "d": params.d,
        "degenerate": report.degenerate,
        "lambda_min": report.lambda_min,
        "gv": _frac_str(report.gv),
        "gv_ceil": ceil(report.gv),
        "wilf_cor27": _frac_str(report.wilf_cor27),
        "wilf_cor27_ceil": None if report.wilf_cor27 is None else ceil(report.wilf_cor27),
        "hoffman_upper": _frac_str(report.hoffman_upper),
        "hoffman_upper_floor": None if report.hoffman_upper is None else floor(report.hoffman_upper),
        "hoffman_paper_literal": _frac_str(report.hoffman_paper_literal),
        "descent_bounds": None if descent is None else [_frac_str(b) for b in descent],
        "descent_final": _frac_str(final),
        "descent_final_ceil": None if final is None else ceil(final),
        "constructed_code_size": report.constructed_code_size,
        "s": report.s,
        "asymptotic_rate": None if report.asymptotic_rate is None else str(report.asymptotic_rate),
    }


def _csv_text(fieldnames: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        flat = dict(row)
        if isinstance(flat.get("descent_bounds"), list):
            flat["descent_bounds"] = ";".join(flat["descent_bounds"])
        writer.writerow({k: ("" if flat.get(k) is None else flat.get(k)) for k in fieldnames})
    return buf.getvalue()


def cmd_bounds(args: argparse.Namespace) -> int:
    params = GraphParams(args.q, args.n, args.d)
    try:
        report = build_bound_report(params, budget=args.budget)
    except BudgetError:
        report = build_bound_report(params, include_descent=False)
    payload = _report_dict(report)
    if args.json:
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        fields = [k for k in SWEEP_FIELDS if k not in ("status", "runtime_seconds")]
        _emit(_csv_text(fields, [payload]), args.output)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    params = GraphParams(args.q, args.n, args.d)
    level = args.level
    if level < 0:
        raise ValueError(f"level must be nonnegative, got {level}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if level == 0:
        table = build_spectrum_level0(params)
        writer.writerow(["weight", "eigenvalue", "multiplicity"])
        for weight, eigenvalue, multiplicity in table.weight_rows():
            writer.writerow([weight, eigenvalue, multiplicity])
    else:
        trace = run_algorithm1(params, budget=args.budget)
        if level > trace.s:
            print(
                f"level {level} is beyond termination: the descent for "
                f"(q={params.q}, n={params.n}, d={params.d}) stops at s = {trace.s}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        table = build_spectrum_level0(params, dense=True, budget=args.budget)
        from .descent import spectrum_descend

        for rec in trace.levels[:level]:
            table = spectrum_descend(table, rec.pivot)
        writer.writerow(["vector", "eigenvalue"])
        for vec, lam in table.entries():
            writer.writerow([str(vec), lam])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    params = GraphParams(args.q, args.n, args.d)
    trace = run_algorithm1(params, budget=args.budget)
    code = LinearCode(params.q, params.n, trace.parity_rows)
    write_pchk(args.output, code)
    payload = [
        {
            "t": rec.t,
            "pivot": str(rec.pivot),
            "lambda_min": rec.lambda_min,
            "degree": rec.degree,
            "bound_numerator": rec.bound.numerator,
            "bound_denominator": rec.bound.denominator,
        }
        for rec in trace.levels
    ]
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    code = read_pchk(args.pchk)
    words = codewords(code, budget=args.budget)
    distance = min_distance(code, budget=args.budget)
    shown = "infinity" if distance == inf else str(distance)
    print(f"q: {code.q}")
    print(f"n: {code.n}")
    print(f"dimension: {code.dimension}")
    print(f"codewords: {len(words)}")
    print(f"min_distance: {shown}")
    return EXIT_OK if distance >= args.d else EXIT_VERIFY_FAILED


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}") from None


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"expected an inclusive range 'lo:hi' or a single integer, got {text!r}") from None
    return lo, hi


def _sweep_cell(cell: tuple[int, int, int, int | None]) -> dict:
    q, n, d, budget = cell
    params = GraphParams(q, n, d)
    start = time.perf_counter()
    try:
        report = build_bound_report(params, budget=budget)
        status = "ok"
    except BudgetError:
        report = build_bound_report(params, include_descent=False)
        status = "skipped"
    row = _report_dict(report)
    row["status"] = status
    row["runtime_seconds"] = f"{time.perf_counter() - start:.3f}"
    return row


def cmd_sweep(args: argparse.Namespace) -> int:
    q_list = _parse_int_list(args.q)
    n_lo, n_hi = _parse_range(args.n)
    d_lo, d_hi = _parse_range(args.d)
    cells = []
    for q in sorted(set(q_list)):
        for n in range(n_lo, n_hi + 1):
            for d in range(d_lo, d_hi + 1):
                try:
                    GraphParams(q, n, d)
                except ValueError as exc:
                    log.warning("skipping invalid cell (q=%d, n=%d, d=%d): %s", q, n, d, exc)
                    continue
                cells.append((q, n, d, args.budget))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(cell) for cell in cells]
    if args.format == "json":
        ordered = [{k: row.get(k) for k in SWEEP_FIELDS} for row in rows]
        _atomic_write_text(args.output, json.dumps(ordered, indent=2) + "\n")
    else:
        _atomic_write_text(args.output, _csv_text(SWEEP_FIELDS, rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvgraph",
        description=(
            "Exact Gilbert-graph spectra, spectral bounds on A_q(n, d), and "
            "spectral-descent construction of linear codes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("-q", type=int, required=True, help="prime alphabet size")
        p.add_argument("-n", type=int, required=True, help="code length")
        p.add_argument("-d", type=int, required=True, help="target minimum distance")

    def add_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=None, help="table-entry cap override")

    p_bounds = sub.add_parser("bounds", help="report all bound values for one (q, n, d)")
    add_params(p_bounds)
    add_budget(p_bounds)
    p_bounds.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p_bounds.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    p_bounds.set_defaults(func=cmd_bounds)

    p_spec = sub.add_parser("spectrum", help="emit a spectrum table as CSV")
    add_params(p_spec)
    add_budget(p_spec)
    p_spec.add_argument("--level", type=int, default=0, help="descent level (default 0)")
    p_spec.add_argument("-o", "--output", default=None)
    p_spec.set_defaults(func=cmd_spectrum)

    p_con = sub.add_parser("construct", help="run the descent and write a parity-check file")
    add_params(p_con)
    add_budget(p_con)
    p_con.add_argument("-o", "--output", required=True, help="gvpchk output path")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="exhaustively verify a parity-check file")
    p_ver.add_argument("pchk", help="gvpchk file to verify")
    p_ver.add_argument("-d", type=int, required=True, help="expected minimum distance")
    add_budget(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="tabulate bound reports over a parameter grid")
    p_sweep.add_argument("-q", required=True, help="comma-separated prime list, e.g. 2,3")
    p_sweep.add_argument("-n", required=True, help="inclusive length range lo:hi")
    p_sweep.add_argument("-d", required=True, help="inclusive distance range lo:hi")
    p_sweep.add_argument("-o", "--output", required=True)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    add_budget(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="%(name)s: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PchkFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
