"""Optimal dominating functions (certificates) and a part-sum verifier.

Every constructor picks target part sums by the case that fires in
:mod:`multidom.formulas` and converts them to per-part +1 counts. When several
parts could play the same role, the lowest input indices are used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import SIGNED_LABELS, classify
from .model import (
    Assignment,
    AssignmentError,
    MinusAssignment,
    PartitionSpec,
    SignedAssignment,
    UnsupportedSpecError,
    Variant,
    check_assignment,
    require_multipartite,
    stats,
)


def _odd_sums(odd_indices, n_plus):
    """Part sum +1 for the first ``n_plus`` odd parts, -1 for the others."""
    return {i: 1 if r < n_plus else -1 for r, i in enumerate(odd_indices)}


def signed_witness(spec: PartitionSpec) -> SignedAssignment:
    label = classify(spec, Variant.SIGNED)
    st = stats(spec)
    sizes, k, t = spec.sizes, st.k, st.t
    odd, even = st.odd_indices, st.even_indices
    sums = dict.fromkeys(range(k), 0)

    if label == SIGNED_LABELS[0]:
        # (2k-t+1)/2 singleton parts at +1, other odd parts at -1, even parts at -2
        lead = (2 * k - t + 1) // 2
        singles = [i for i in odd if sizes[i] == 1][:lead]
        for i in odd:
            sums[i] = 1 if i in singles else -1
        for i in even:
            sums[i] = -2
    elif label in (SIGNED_LABELS[1], SIGNED_LABELS[5]):
        sums = dict(enumerate(sizes))
    elif label == SIGNED_LABELS[2]:
        sums[odd[0]], sums[even[0]] = 3, 2
    elif label == SIGNED_LABELS[3]:
        sums[odd[0]] = 1
        sums[even[0]] = sums[even[1]] = 2
    elif label == SIGNED_LABELS[4]:
        if t >= 3:
            sums.update(_odd_sums(odd, (t + 3) // 2))
        elif sizes[odd[0]] == 3:
            sums[odd[0]] = 3
        else:
            pair = next(i for i in even if sizes[i] == 2)
            sums[odd[0]], sums[pair] = 1, 2
    elif label == SIGNED_LABELS[6]:
        sums[0] = sums[1] = 3
    elif label == SIGNED_LABELS[7]:
        need = t // 2 + 1
        singles = [i for i in odd if sizes[i] == 1][:need]
        pairs = [i for i in even if sizes[i] == 2][: need - len(singles)]
        for i in odd:
            sums[i] = 1 if i in singles else -1
        for i in pairs:
            sums[i] = 2
    else:
        if t == 0:
            sums[even[0]] = sums[even[1]] = 2
        elif t == 2 and k == 2:
            small = 0 if sizes[0] == 3 else 1
            sums[small], sums[1 - small] = 3, 1
        elif t == 2:
            sums[odd[0]] = sums[odd[1]] = 1
            sums[even[0]] = 2
        else:
            sums.update(_odd_sums(odd, (t + 4) // 2))
    return SignedAssignment.from_part_sums(spec, [sums[i] for i in range(k)])


def signed_total_witness(spec: PartitionSpec) -> SignedAssignment:
    require_multipartite(spec)
    st = stats(spec)
    t, odd, even = st.t, st.odd_indices, st.even_indices
    sums = dict.fromkeys(range(st.k), 0)
    if t == 1:
        sums[odd[0]], sums[even[0]] = 1, 2
    elif t == 0:
        sums[even[0]] = sums[even[1]] = 2
    else:
        n_minus = (t - 3) // 2 if t % 2 else (t - 2) // 2
        for r, i in enumerate(odd):
            sums[i] = -1 if r < n_minus else 1
    return SignedAssignment.from_part_sums(spec, [sums[i] for i in range(st.k)])


def minus_witness(spec: PartitionSpec) -> MinusAssignment:
    require_multipartite(spec)
    sizes = spec.sizes
    if 1 in sizes:
        plus = {sizes.index(1)}
    else:
        plus = {0, 1}
    return MinusAssignment(
        tuple((1, n - 1, 0) if i in plus else (0, n, 0) for i, n in enumerate(sizes))
    )


def witness(spec: PartitionSpec, variant: Variant | str) -> Assignment:
    variant = Variant(variant)
    if variant is Variant.SIGNED:
        return signed_witness(spec)
    if variant is Variant.SIGNED_TOTAL:
        return signed_total_witness(spec)
    return minus_witness(spec)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of checking an assignment against a domination condition.

    ``part_minima[i]`` is the smallest neighbourhood sum over the vertices of
    part i; ``tightest`` names the (part index, vertex value) attaining the
    overall minimum, with the lowest part index winning ties.
    """

    variant: Variant
    valid: bool
    weight: int
    part_minima: tuple[int, ...]
    tightest: tuple[int, int]

    @property
    def margin(self) -> int:
        return min(self.part_minima) - 1


def verify(spec: PartitionSpec, a: Assignment, variant: Variant | str) -> ValidityReport:
    variant = Variant(variant)
    check_assignment(spec, a)
    if variant is not Variant.MINUS and isinstance(a, MinusAssignment):
        raise AssignmentError(f"a {{-1,0,1}}-valued assignment cannot be checked as {variant}")
    if variant is Variant.SIGNED_TOTAL and spec.k < 2:
        raise UnsupportedSpecError("signed total domination needs k >= 2 (no isolated vertices)")
    if isinstance(a, SignedAssignment):
        present = [
            [x for x, count in ((1, p), (-1, n - p)) if count]
            for p, n in zip(a.plus_counts, spec.sizes)
        ]
    else:
        present = [[x for x, count in zip((1, 0, -1), c) if count] for c in a.counts]
    sums = a.part_sums(spec)
    total = sum(sums)
    closed = variant is not Variant.SIGNED_TOTAL
    minima = []
    tightest, tight_value = (0, 0), None
    for i, (s, values) in enumerate(zip(sums, present)):
        # the least value present in a part gives its smallest closed sum
        worst_x = values[-1]
        worst = total - s + (worst_x if closed else 0)
        minima.append(worst)
        if tight_value is None or worst < tight_value:
            tightest, tight_value = (i, worst_x), worst
    return ValidityReport(
        variant=variant,
        valid=min(minima) >= 1,
        weight=total,
        part_minima=tuple(minima),
        tightest=tightest,
    )
