"""Closed-form signed, signed total and minus domination numbers of K_{n_1,...,n_k}.

Each number is computed by walking a decision tree whose leaves carry a stable
label, so that callers can report which case produced a value. Cases are tried
top to bottom and the first match wins.
"""

from __future__ import annotations

from .model import PartitionSpec, Variant, require_multipartite, stats

SIGNED_LABELS = (
    "signed/odd_t/t_ge3_many_singletons",
    "signed/odd_t/t1_k2_n1_eq_1",
    "signed/odd_t/t1_k2_n1_ge5_n2_ge4",
    "signed/odd_t/t1_k_ge3_n1_ne3_evens_ge4",
    "signed/odd_t/otherwise",
    "signed/even_t/t2_k2_min_eq_1",
    "signed/even_t/t2_k2_min_ge5",
    "signed/even_t/many_small_parts",
    "signed/even_t/otherwise",
)
SIGNED_TOTAL_LABELS = (
    "signed-total/t_odd",
    "signed-total/t_zero",
    "signed-total/t_even_positive",
)
MINUS_LABELS = (
    "minus/has_singleton",
    "minus/no_singleton",
)
LABELS = {
    Variant.SIGNED: SIGNED_LABELS,
    Variant.SIGNED_TOTAL: SIGNED_TOTAL_LABELS,
    Variant.MINUS: MINUS_LABELS,
}


def _signed_case(spec: PartitionSpec) -> tuple[str, int]:
    require_multipartite(spec)
    st = stats(spec)
    k, t = st.k, st.t
    sizes = spec.sizes
    if t % 2:
        odd = sizes[st.odd_indices[0]] if t == 1 else None
        evens = [sizes[i] for i in st.even_indices]
        if t >= 3 and 2 * st.i1 >= 2 * k - t + 1:
            return SIGNED_LABELS[0], 1
        if t == 1 and k == 2 and odd == 1:
            return SIGNED_LABELS[1], 1 + evens[0]
        if t == 1 and k == 2 and odd >= 5 and evens[0] >= 4:
            return SIGNED_LABELS[2], 5
        if t == 1 and k >= 3 and odd != 3 and all(n >= 4 for n in evens):
            return SIGNED_LABELS[3], 5
        return SIGNED_LABELS[4], 3
    if t == 2 and k == 2:
        if st.min_size == 1:
            return SIGNED_LABELS[5], sizes[0] + sizes[1]
        if st.min_size >= 5:
            return SIGNED_LABELS[6], 6
    if 2 * (st.i1 + st.i2) >= t + 2:
        return SIGNED_LABELS[7], 2
    return SIGNED_LABELS[8], 4


def _signed_total_case(spec: PartitionSpec) -> tuple[str, int]:
    require_multipartite(spec)
    t = stats(spec).t
    if t % 2:
        return SIGNED_TOTAL_LABELS[0], 3
    if t == 0:
        return SIGNED_TOTAL_LABELS[1], 4
    return SIGNED_TOTAL_LABELS[2], 2


def _minus_case(spec: PartitionSpec) -> tuple[str, int]:
    require_multipartite(spec)
    if 1 in spec.sizes:
        return MINUS_LABELS[0], 1
    return MINUS_LABELS[1], 2


_CASES = {
    Variant.SIGNED: _signed_case,
    Variant.SIGNED_TOTAL: _signed_total_case,
    Variant.MINUS: _minus_case,
}


def signed_domination_number(spec: PartitionSpec) -> int:
    return _signed_case(spec)[1]


def signed_total_domination_number(spec: PartitionSpec) -> int:
    return _signed_total_case(spec)[1]


def minus_domination_number(spec: PartitionSpec) -> int:
    return _minus_case(spec)[1]


def domination_number(spec: PartitionSpec, variant: Variant | str) -> int:
    return _CASES[Variant(variant)](spec)[1]


def classify(spec: PartitionSpec, variant: Variant | str) -> str:
    """Label of the decision-tree leaf that determines the value for ``spec``.

    >>> classify(PartitionSpec((1, 6)), "signed")
    'signed/odd_t/t1_k2_n1_eq_1'
    """
    return _CASES[Variant(variant)](spec)[0]
