import itertools

from multidom.model import Variant
from multidom.sweep import CSV_COLUMNS, evaluate, iter_partitions, iter_specs, run_sweep
from multidom import PartitionSpec


def _count_by_brute_force(max_n, max_k, min_k=2):
    return sum(
        1
        for k in range(min_k, max_k + 1)
        for sizes in itertools.combinations_with_replacement(range(1, max_n + 1), k)
        if sum(sizes) <= max_n
    )


def test_iter_partitions_small():
    assert list(iter_partitions(6, 3)) == [(1, 1, 4), (1, 2, 3), (2, 2, 2)]
    assert list(iter_partitions(3, 4)) == []


def test_spec_counts_match_brute_force():
    for max_n, max_k in [(6, 2), (10, 4), (12, 5), (14, 6)]:
        assert sum(1 for _ in iter_specs(max_n, max_k)) == _count_by_brute_force(max_n, max_k)


def test_canonical_order():
    keys = [(s.n, s.k, s.sizes) for s in iter_specs(9, 4)]
    assert keys == sorted(keys)
    assert all(list(s.sizes) == sorted(s.sizes) for s in iter_specs(9, 4))


def test_evaluate_row():
    row = evaluate(PartitionSpec((3, 4)), "signed")
    assert row.formula == row.oracle == row.naive == row.witness_weight == 3
    assert row.case_label == "signed/odd_t/otherwise"
    assert row.agree and row.witness_valid
    assert [f for f in row.csv_fields()][:3] == ["3,4", "7", "2"]
    assert len(row.csv_fields()) == len(CSV_COLUMNS)


def test_naive_skipped_outside_budget():
    row = evaluate(PartitionSpec((3, 4)), "minus", budget_naive=100)
    assert row.naive is None
    assert row.csv_fields()[CSV_COLUMNS.index("naive")] == ""
    assert row.agree


def test_minus_sweep_range():
    rows, summary = run_sweep(6, 2, ["minus"])
    assert summary.mismatches == 0
    assert {r.formula for r in rows} == {1, 2}
    assert summary.uncovered() == []


def test_parallel_sweep_matches_sequential():
    seq, _ = run_sweep(8, 3, list(Variant))
    par, _ = run_sweep(8, 3, list(Variant), jobs=2)
    assert seq == par
