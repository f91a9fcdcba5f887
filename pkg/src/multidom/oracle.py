"""Exact domination numbers by exhaustive search.

Two independent tiers:

* the reduced oracles search over per-part sums only, which is sound because
  every neighbourhood sum of a part-i vertex of value x equals
  x + S - s_i (closed) or S - s_i (open), S being the total weight and s_i
  the part sum;
* :func:`naive_oracle` enumerates every labelling of an explicit graph and
  evaluates neighbourhood sums straight from the adjacency lists.
"""

from __future__ import annotations

import itertools

import numpy as np

from .model import (
    ExplicitGraph,
    MinusAssignment,
    PartitionSpec,
    SignedAssignment,
    Variant,
    require_multipartite,
)

DEFAULT_BUDGET_STATES = 10**7
# 2**16 labellings: n <= 16 for the signed variants, n <= 10 for minus.
DEFAULT_BUDGET_NAIVE = 2**16


class BudgetExceededError(RuntimeError):
    pass


def search_space_size(spec: PartitionSpec, variant: Variant | str) -> int:
    """Number of part-sum vectors the reduced oracle would visit without pruning."""
    per_part = 2 if Variant(variant) is Variant.MINUS else 1
    size = 1
    for n in spec.sizes:
        size *= per_part * n + 1
    return size


def _signed_feasible(sizes, plus, S, total):
    for n, p in zip(sizes, plus):
        rest = S - (2 * p - n)
        if total:
            if rest < 1:
                return False
        elif (p > 0 and rest < 0) or (p < n and rest < 2):
            return False
    return True


def _least_present(n: int, s: int) -> int:
    # zeros fill every slot not needed to reach s
    if s == n:
        return 1
    return 0 if s >= 0 else -1


def _minus_feasible(sizes, sums, S):
    return all(_least_present(n, s) + S - s >= 1 for n, s in zip(sizes, sums))


def _search(choices, feasible):
    """Lexicographic depth-first search for the minimum-sum feasible vector.

    ``choices[i]`` lists (sum, key) pairs for part i in increasing order of sum.
    A branch is cut once its best possible total cannot beat the incumbent, so
    the first minimiser found is the lexicographically smallest one.
    """
    k = len(choices)
    floor_after = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        floor_after[i] = floor_after[i + 1] + choices[i][0][0]
    best: list = [None, None]
    keys = [None] * k

    def dfs(depth: int, partial: int) -> None:
        if best[0] is not None and partial + floor_after[depth] >= best[0]:
            return
        if depth == k:
            if feasible(tuple(keys), partial):
                best[0], best[1] = partial, tuple(keys)
            return
        for s, key in choices[depth]:
            keys[depth] = key
            dfs(depth + 1, partial + s)

    dfs(0, 0)
    return best[0], best[1]


def _check_budget(spec, variant, budget_states):
    size = search_space_size(spec, variant)
    if size > budget_states:
        raise BudgetExceededError(
            f"{variant} oracle on K_{{{spec}}} needs {size} states, budget is {budget_states}"
        )


def _oracle_signed_like(spec, total, budget_states):
    require_multipartite(spec)
    _check_budget(spec, Variant.SIGNED_TOTAL if total else Variant.SIGNED, budget_states)
    sizes = spec.sizes
    choices = [[(2 * p - n, p) for p in range(n + 1)] for n in sizes]
    value, plus = _search(choices, lambda keys, S: _signed_feasible(sizes, keys, S, total))
    return value, SignedAssignment(plus)


def oracle_signed(
    spec: PartitionSpec, budget_states: int = DEFAULT_BUDGET_STATES
) -> tuple[int, SignedAssignment]:
    return _oracle_signed_like(spec, False, budget_states)


def oracle_signed_total(
    spec: PartitionSpec, budget_states: int = DEFAULT_BUDGET_STATES
) -> tuple[int, SignedAssignment]:
    return _oracle_signed_like(spec, True, budget_states)


def oracle_minus(
    spec: PartitionSpec, budget_states: int = DEFAULT_BUDGET_STATES
) -> tuple[int, MinusAssignment]:
    require_multipartite(spec)
    _check_budget(spec, Variant.MINUS, budget_states)
    sizes = spec.sizes
    choices = [[(s, s) for s in range(-n, n + 1)] for n in sizes]
    value, sums = _search(choices, lambda keys, S: _minus_feasible(sizes, keys, S))
    counts = tuple(
        (s, n - s, 0) if s >= 0 else (0, n + s, -s) for n, s in zip(sizes, sums)
    )
    return value, MinusAssignment(counts)


def oracle(spec: PartitionSpec, variant: Variant | str, budget_states: int = DEFAULT_BUDGET_STATES):
    """Dispatch to the reduced oracle for ``variant``; returns (value, argmin)."""
    variant = Variant(variant)
    if variant is Variant.SIGNED:
        return oracle_signed(spec, budget_states)
    if variant is Variant.SIGNED_TOTAL:
        return oracle_signed_total(spec, budget_states)
    return oracle_minus(spec, budget_states)


def _neighbourhood_matrix(graph: ExplicitGraph, closed: bool) -> np.ndarray:
    m = np.zeros((graph.vertex_count, graph.vertex_count), dtype=np.int64)
    for v, nbrs in enumerate(graph.adjacency):
        m[list(nbrs), v] = 1
        if closed:
            m[v, v] = 1
    return m


def naive_oracle(
    graph: ExplicitGraph, variant: Variant | str, budget_labelings: int = DEFAULT_BUDGET_NAIVE
) -> int:
    """Minimum weight over all labellings of ``graph`` that dominate every vertex."""
    variant = Variant(variant)
    values = (-1, 0, 1) if variant is Variant.MINUS else (-1, 1)
    n = graph.vertex_count
    if len(values) ** n > budget_labelings:
        raise BudgetExceededError(
            f"naive {variant} search on {n} vertices needs {len(values) ** n} labellings, "
            f"budget is {budget_labelings}"
        )
    if variant is Variant.SIGNED_TOTAL and any(not nbrs for nbrs in graph.adjacency):
        raise ValueError("signed total domination is undefined with isolated vertices")
    labellings = np.array(list(itertools.product(values, repeat=n)), dtype=np.int64)
    labellings = labellings.reshape(-1, n)
    sums = labellings @ _neighbourhood_matrix(graph, variant is not Variant.SIGNED_TOTAL)
    ok = (sums >= 1).all(axis=1)
    return int(labellings[ok].sum(axis=1).min())


def naive_min_neighbourhood_sum(
    graph: ExplicitGraph, labelling, variant: Variant | str
) -> int:
    """Smallest f(N[v]) (or f(N(v)) for signed-total) over all vertices, computed vertex by vertex."""
    closed = Variant(variant) is not Variant.SIGNED_TOTAL
    return min(
        sum(labelling[u] for u in nbrs) + (labelling[v] if closed else 0)
        for v, nbrs in enumerate(graph.adjacency)
    )
