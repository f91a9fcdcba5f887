"""Cross-validation sweeps over all small complete multipartite graphs."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .formulas import LABELS, classify, domination_number
from .model import PartitionSpec, Variant, build_graph, stats
from .oracle import (
    DEFAULT_BUDGET_NAIVE,
    DEFAULT_BUDGET_STATES,
    naive_oracle,
    oracle,
)
from .witness import verify, witness

CSV_COLUMNS = (
    "sizes", "n", "k", "t", "i1", "i2", "variant", "case_label",
    "formula", "oracle", "naive", "witness_weight", "witness_valid", "agree",
)


def iter_partitions(n: int, k: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-decreasing k-tuples of integers >= ``smallest`` summing to ``n``, lexicographically."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(smallest, n // k + 1):
        for rest in iter_partitions(n - first, k - 1, first):
            yield (first,) + rest


def iter_specs(max_n: int, max_k: int, min_k: int = 2) -> Iterator[PartitionSpec]:
    """Every spec with min_k <= k <= max_k and n <= max_n, ordered by n, then k, then sizes."""
    for n in range(1, max_n + 1):
        for k in range(min_k, max_k + 1):
            for sizes in iter_partitions(n, k):
                yield PartitionSpec(sizes)


@dataclass(frozen=True)
class SweepRow:
    sizes: tuple[int, ...]
    n: int
    k: int
    t: int
    i1: int
    i2: int
    variant: str
    case_label: str
    formula: int
    oracle: int | None
    naive: int | None
    witness_weight: int
    witness_valid: bool
    agree: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["sizes"] = list(self.sizes)
        return d

    def csv_fields(self) -> list[str]:
        out = []
        for col in CSV_COLUMNS:
            value = getattr(self, col)
            if col == "sizes":
                out.append(",".join(map(str, value)))
            elif value is None:
                out.append("")
            elif isinstance(value, bool):
                out.append("true" if value else "false")
            else:
                out.append(str(value))
        return out


def evaluate(
    spec: PartitionSpec,
    variant: Variant | str,
    budget_states: int = DEFAULT_BUDGET_STATES,
    budget_naive: int = DEFAULT_BUDGET_NAIVE,
) -> SweepRow:
    """Run every engine on one (spec, variant) pair.

    The naive oracle is skipped (``naive`` is None) when its labelling count
    exceeds ``budget_naive``. The reduced oracle always runs.
    """
    variant = Variant(variant)
    st = stats(spec)
    value = domination_number(spec, variant)
    reduced = oracle(spec, variant, budget_states)[0]
    base = 3 if variant is Variant.MINUS else 2
    naive = None
    if base**spec.n <= budget_naive:
        naive = naive_oracle(build_graph(spec), variant, budget_naive)
    report = verify(spec, witness(spec, variant), variant)
    exact = [v for v in (reduced, naive) if v is not None]
    agree = all(v == value for v in exact) and report.valid and report.weight == value
    return SweepRow(
        sizes=spec.sizes, n=st.n, k=st.k, t=st.t, i1=st.i1, i2=st.i2,
        variant=variant.value, case_label=classify(spec, variant),
        formula=value, oracle=reduced, naive=naive,
        witness_weight=report.weight, witness_valid=report.valid, agree=agree,
    )


def _evaluate_task(args):
    return evaluate(*args)


@dataclass
class SweepSummary:
    instances: int = 0
    mismatches: int = 0
    naive_runs: int = 0
    coverage: Counter = field(default_factory=Counter)
    variants: tuple[Variant, ...] = ()

    def uncovered(self) -> list[str]:
        return [
            label for v in self.variants for label in LABELS[v] if not self.coverage[label]
        ]


def run_sweep(
    max_n: int,
    max_k: int,
    variants: Iterable[Variant | str] = tuple(Variant),
    budget_states: int = DEFAULT_BUDGET_STATES,
    budget_naive: int = DEFAULT_BUDGET_NAIVE,
    jobs: int = 1,
    min_k: int = 2,
) -> tuple[list[SweepRow], SweepSummary]:
    """Evaluate every spec in range; rows come back in canonical enumeration order."""
    variants = tuple(Variant(v) for v in variants)
    tasks = [
        (spec, v, budget_states, budget_naive)
        for spec in iter_specs(max_n, max_k, min_k)
        for v in variants
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_evaluate_task, tasks, chunksize=16))
    else:
        rows = [_evaluate_task(task) for task in tasks]
    return rows, summarize(rows, variants)


def summarize(rows: Iterable[SweepRow], variants: Iterable[Variant | str]) -> SweepSummary:
    summary = SweepSummary(variants=tuple(Variant(v) for v in variants))
    for row in rows:
        summary.instances += 1
        summary.mismatches += not row.agree
        summary.naive_runs += row.naive is not None
        summary.coverage[row.case_label] += 1
    return summary
