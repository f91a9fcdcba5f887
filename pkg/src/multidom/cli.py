"""Command-line interface: ``multidom {compute,witness,verify,sweep,bench}``.

Exit codes: 0 success or valid assignment, 1 invalid assignment, 2 usage or
spec error, 3 formula/oracle disagreement.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from pathlib import Path

from .formulas import LABELS, classify, domination_number
from .model import (
    Assignment,
    AssignmentError,
    MinusAssignment,
    PartitionSpec,
    SignedAssignment,
    Variant,
    expand,
)
from .oracle import DEFAULT_BUDGET_NAIVE, DEFAULT_BUDGET_STATES, BudgetExceededError, oracle
from .sweep import CSV_COLUMNS, run_sweep
from .witness import ValidityReport, verify, witness

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3
VARIANTS = [v.value for v in Variant]


def parse_assignment(text: str, spec: PartitionSpec, variant: Variant) -> Assignment:
    """Read ``part:plus`` or ``part:plus,zero,minus`` lines (1-based parts, ``#`` comments)."""
    entries: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            index_text, counts_text = line.split(":")
            index = int(index_text)
            counts = tuple(int(c) for c in counts_text.split(","))
        except ValueError:
            raise AssignmentError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
        if len(counts) not in (1, 3):
            raise AssignmentError(f"line {lineno}: expected 1 or 3 counts, got {len(counts)}")
        if not 1 <= index <= spec.k:
            raise AssignmentError(f"line {lineno}: part index {index} outside 1..{spec.k}")
        if index in entries:
            raise AssignmentError(f"line {lineno}: part {index} given twice")
        entries[index] = counts
    missing = [i for i in range(1, spec.k + 1) if i not in entries]
    if missing:
        raise AssignmentError(f"no counts for part(s) {', '.join(map(str, missing))}")
    widths = {len(c) for c in entries.values()}
    if len(widths) > 1:
        raise AssignmentError("mixes signed (plus) and minus (plus,zero,minus) lines")
    ordered = [entries[i] for i in range(1, spec.k + 1)]
    if widths == {3}:
        if variant is not Variant.MINUS:
            raise AssignmentError(f"{variant} assignments take one +1 count per part")
        return MinusAssignment(tuple(ordered))
    signed = SignedAssignment(tuple(c[0] for c in ordered))
    if variant is Variant.MINUS:
        return MinusAssignment.from_signed(spec, signed)
    return signed


def format_assignment(a: Assignment) -> list[str]:
    if isinstance(a, SignedAssignment):
        return [f"{i}:{p}" for i, p in enumerate(a.plus_counts, 1)]
    return [f"{i}:{','.join(map(str, c))}" for i, c in enumerate(a.counts, 1)]


def _counts_json(a: Assignment):
    if isinstance(a, SignedAssignment):
        return list(a.plus_counts)
    return [list(c) for c in a.counts]


def _signed_str(x: int) -> str:
    return f"+{x}" if x > 0 else str(x)


def _emit(fmt: str, record: dict, text_lines: list[str], out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, delimiter=";", lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(
            [
                json.dumps(v) if isinstance(v, (list, bool)) else "" if v is None else v
                for v in record.values()
            ]
        )
    else:
        out.write("\n".join(text_lines) + "\n")


def _report_record(spec: PartitionSpec, a: Assignment, report: ValidityReport) -> dict:
    return {
        "sizes": list(spec.sizes),
        "variant": report.variant.value,
        "counts": _counts_json(a),
        "vector": list(expand(spec, a)),
        "weight": report.weight,
        "valid": report.valid,
        "part_minima": list(report.part_minima),
        "tightest_part": report.tightest[0] + 1,
        "tightest_value": report.tightest[1],
    }


def cmd_compute(args) -> int:
    spec, variant = args.parts, Variant(args.variant)
    record: dict = {"sizes": list(spec.sizes), "variant": variant.value}
    lines = [f"K_{{{spec}}} {variant}"]
    status = EXIT_OK
    if args.engine in ("formula", "both"):
        record["formula"] = domination_number(spec, variant)
        record["case_label"] = classify(spec, variant)
        lines += [f"formula: {record['formula']}", f"case: {record['case_label']}"]
    if args.engine in ("oracle", "both"):
        value, argmin = oracle(spec, variant, args.budget_states)
        record["oracle"] = value
        record["oracle_argmin"] = _counts_json(argmin)
        lines.append(f"oracle: {value}")
    if args.engine == "both":
        record["agree"] = record["formula"] == record["oracle"]
        lines.append("agree" if record["agree"] else "MISMATCH")
        if not record["agree"]:
            status = EXIT_MISMATCH
    _emit(args.format, record, lines)
    return status


def cmd_witness(args) -> int:
    spec, variant = args.parts, Variant(args.variant)
    a = witness(spec, variant)
    report = verify(spec, a, variant)
    lines = [
        f"# K_{{{spec}}} {variant} witness: weight {report.weight}, "
        f"{'valid' if report.valid else 'INVALID'}",
        *format_assignment(a),
        "# vector: " + " ".join(_signed_str(x) for x in expand(spec, a)),
    ]
    _emit(args.format, _report_record(spec, a, report), lines)
    return EXIT_OK if report.valid else EXIT_MISMATCH


def cmd_verify(args) -> int:
    spec, variant = args.parts, Variant(args.variant)
    text = sys.stdin.read() if args.assignment == "-" else Path(args.assignment).read_text("utf-8")
    a = parse_assignment(text, spec, variant)
    report = verify(spec, a, variant)
    part, value = report.tightest
    lines = [
        f"K_{{{spec}}} {variant}: {'valid' if report.valid else 'invalid'}",
        f"weight: {report.weight}",
        "part minima: " + " ".join(map(str, report.part_minima)),
        f"tightest: part {part + 1}, value {_signed_str(value)}, "
        f"sum {report.part_minima[part]}",
    ]
    _emit(args.format, _report_record(spec, a, report), lines)
    return EXIT_OK if report.valid else EXIT_INVALID


def _parse_variants(text: str) -> list[Variant]:
    if text == "all":
        return list(Variant)
    try:
        return [Variant(v.strip()) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"variants must be 'all' or a comma list of {', '.join(VARIANTS)}"
        ) from None


def write_rows(rows, fmt: str, out) -> None:
    if fmt == "json":
        json.dump([r.as_dict() for r in rows], out, indent=1)
        out.write("\n")
        return
    writer = csv.writer(out, delimiter=";", lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_fields())


def summary_lines(summary) -> list[str]:
    lines = [
        f"instances: {summary.instances}",
        f"naive checks: {summary.naive_runs}",
        f"mismatches: {summary.mismatches}",
        "branch coverage:",
    ]
    for v in summary.variants:
        for label in LABELS[v]:
            lines.append(f"  {label}: {summary.coverage[label]}")
    uncovered = summary.uncovered()
    lines.append("uncovered: " + (", ".join(uncovered) if uncovered else "none"))
    return lines


def cmd_sweep(args) -> int:
    rows, summary = run_sweep(
        args.max_n,
        args.max_k,
        args.variants,
        budget_states=args.budget_states,
        budget_naive=args.budget_naive,
        jobs=args.jobs,
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_rows(rows, args.format, fh)
        report_to = sys.stdout
    else:
        write_rows(rows, args.format, sys.stdout)
        report_to = sys.stderr
    report_to.write("\n".join(summary_lines(summary)) + "\n")
    return EXIT_MISMATCH if summary.mismatches else EXIT_OK


def _time(fn, repetitions: int) -> list[float]:
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return samples


def cmd_bench(args) -> int:
    spec, variant = args.parts, Variant(args.variant)
    record: dict = {"sizes": list(spec.sizes), "variant": variant.value,
                    "repetitions": args.repetitions}
    lines = [f"K_{{{spec}}} {variant}, {args.repetitions} repetitions"]
    for name, fn in (
        ("formula", lambda: domination_number(spec, variant)),
        ("oracle", lambda: oracle(spec, variant, args.budget_states)),
    ):
        samples = _time(fn, args.repetitions)
        stats_ = {
            "mean_s": statistics.fmean(samples),
            "min_s": min(samples),
            "max_s": max(samples),
        }
        record[name] = stats_
        lines.append(
            f"{name:8s} mean {stats_['mean_s'] * 1e6:10.1f} us  "
            f"min {stats_['min_s'] * 1e6:10.1f} us  max {stats_['max_s'] * 1e6:10.1f} us"
        )
    _emit(args.format if args.format != "csv" else "json", record, lines)
    return EXIT_OK


def _parts(text: str) -> PartitionSpec:
    try:
        return PartitionSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=["text", "json", "csv"], default=default("text"))
    parser.add_argument("--budget-states", type=_positive_int,
                        default=default(DEFAULT_BUDGET_STATES),
                        help="max part-sum vectors for the reduced oracle")
    parser.add_argument("--budget-naive", type=int, default=default(DEFAULT_BUDGET_NAIVE),
                        help="max labellings for the naive per-vertex oracle (0 disables it)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multidom",
        description="Signed, signed total and minus domination numbers of "
        "complete multipartite graphs.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def subcommand(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    def parts_and_variant(p, default_variant="signed"):
        p.add_argument("--parts", type=_parts, required=True, help="part sizes, e.g. 3,4,5")
        p.add_argument("--variant", choices=VARIANTS, default=default_variant)

    p = subcommand("compute", cmd_compute, "domination number of one graph")
    parts_and_variant(p)
    p.add_argument("--engine", choices=["formula", "oracle", "both"], default="formula")

    p = subcommand("witness", cmd_witness, "an optimal dominating function")
    parts_and_variant(p)

    p = subcommand("verify", cmd_verify, "check an assignment file")
    parts_and_variant(p)
    p.add_argument("--assignment", required=True, help="assignment file, or - for stdin")

    p = subcommand("sweep", cmd_sweep, "cross-validate formulas against the oracles")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.add_argument("--max-k", type=_positive_int, required=True)
    p.add_argument("--variants", type=_parse_variants, default=list(Variant),
                   help="'all' or a comma list of variants")
    p.add_argument("--out", help="report file; rows go to stdout when omitted")
    p.add_argument("--jobs", type=_positive_int, default=1)

    p = subcommand("bench", cmd_bench, "time formula against reduced oracle")
    parts_and_variant(p)
    p.add_argument("--repetitions", type=_positive_int, default=100)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetExceededError, OSError) as exc:
        # UnsupportedSpecError and AssignmentError are ValueErrors
        print(f"multidom {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
