"""Complete multipartite graphs and compressed weight functions on them.

A weight function on K_{n_1,...,n_k} is stored per part: only the number of
vertices carrying each value matters, because permuting vertices inside a
part is a graph automorphism.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class Variant(str, enum.Enum):
    SIGNED = "signed"
    SIGNED_TOTAL = "signed-total"
    MINUS = "minus"

    def __str__(self) -> str:
        return self.value


class UnsupportedSpecError(ValueError):
    """Raised when an operation needs at least two parts."""


class AssignmentError(ValueError):
    """Raised when an assignment does not fit the partition it is used with."""


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes (n_1, ..., n_k) of a complete multipartite graph, input order kept."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        if not sizes:
            raise ValueError("a partition needs at least one part")
        for size in sizes:
            if isinstance(size, bool) or not isinstance(size, int):
                raise TypeError(f"part sizes must be integers, got {size!r}")
            if size < 1:
                raise ValueError(f"part sizes must be positive, got {size}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "PartitionSpec":
        """Parse ``"3,4,5"`` into a spec."""
        fields = [f.strip() for f in text.split(",")]
        if not fields or any(not re.fullmatch(r"\d+", f) for f in fields):
            raise ValueError(f"expected comma-separated positive integers, got {text!r}")
        return cls(tuple(int(f) for f in fields))

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))


@dataclass(frozen=True)
class SpecStats:
    n: int
    k: int
    t: int
    i1: int
    i2: int
    odd_indices: tuple[int, ...]
    even_indices: tuple[int, ...]
    min_size: int


@dataclass(frozen=True)
class SignedAssignment:
    """A {-1,+1} function: part i has ``plus_counts[i]`` vertices at +1, the rest at -1."""

    plus_counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "plus_counts", tuple(self.plus_counts))

    def part_sums(self, spec: PartitionSpec) -> tuple[int, ...]:
        check_assignment(spec, self)
        return tuple(2 * p - n for p, n in zip(self.plus_counts, spec.sizes))

    @classmethod
    def from_part_sums(cls, spec: PartitionSpec, sums: Sequence[int]) -> "SignedAssignment":
        if len(sums) != spec.k:
            raise AssignmentError(f"expected {spec.k} part sums, got {len(sums)}")
        counts = []
        for i, (s, n) in enumerate(zip(sums, spec.sizes)):
            if abs(s) > n or (s - n) % 2:
                raise AssignmentError(f"part {i + 1} of size {n} cannot have sum {s}")
            counts.append((s + n) // 2)
        return cls(tuple(counts))


@dataclass(frozen=True)
class MinusAssignment:
    """A {-1,0,+1} function stored as (#+1, #0, #-1) per part."""

    counts: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(tuple(c) for c in self.counts))

    def part_sums(self, spec: PartitionSpec) -> tuple[int, ...]:
        check_assignment(spec, self)
        return tuple(a - c for a, _, c in self.counts)

    @classmethod
    def from_signed(cls, spec: PartitionSpec, signed: SignedAssignment) -> "MinusAssignment":
        check_assignment(spec, signed)
        return cls(tuple((p, 0, n - p) for p, n in zip(signed.plus_counts, spec.sizes)))


Assignment = Union[SignedAssignment, MinusAssignment]


@dataclass(frozen=True)
class ExplicitGraph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    part_of: tuple[int, ...] | None = None

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)


def require_multipartite(spec: PartitionSpec) -> None:
    if spec.k < 2:
        raise UnsupportedSpecError(
            f"K_{{{spec}}} has {spec.k} part; the domination formulas assume k >= 2 parts"
        )


def stats(spec: PartitionSpec) -> SpecStats:
    odd = tuple(i for i, n in enumerate(spec.sizes) if n % 2)
    even = tuple(i for i, n in enumerate(spec.sizes) if n % 2 == 0)
    return SpecStats(
        n=spec.n,
        k=spec.k,
        t=len(odd),
        i1=sum(1 for i in odd if spec.sizes[i] == 1),
        i2=sum(1 for i in even if spec.sizes[i] == 2),
        odd_indices=odd,
        even_indices=even,
        min_size=min(spec.sizes),
    )


def build_graph(spec: PartitionSpec) -> ExplicitGraph:
    part_of = tuple(i for i, n in enumerate(spec.sizes) for _ in range(n))
    vertices = range(len(part_of))
    adjacency = tuple(
        tuple(u for u in vertices if part_of[u] != part_of[v]) for v in vertices
    )
    return ExplicitGraph(len(part_of), adjacency, part_of)


def check_assignment(spec: PartitionSpec, a: Assignment) -> None:
    """Raise AssignmentError unless ``a`` has one in-range entry per part of ``spec``."""
    if isinstance(a, SignedAssignment):
        entries = a.plus_counts
    elif isinstance(a, MinusAssignment):
        entries = a.counts
    else:
        raise TypeError(f"not an assignment: {a!r}")
    if len(entries) != spec.k:
        raise AssignmentError(f"assignment has {len(entries)} parts, spec has {spec.k}")
    for i, (entry, n) in enumerate(zip(entries, spec.sizes)):
        if isinstance(a, SignedAssignment):
            if not 0 <= entry <= n:
                raise AssignmentError(f"part {i + 1}: +1 count {entry} outside [0, {n}]")
        else:
            if len(entry) != 3 or min(entry) < 0 or sum(entry) != n:
                raise AssignmentError(
                    f"part {i + 1}: counts {entry} must be nonnegative and sum to {n}"
                )


def iter_part_values(spec: PartitionSpec, a: Assignment) -> Iterator[tuple[int, ...]]:
    """Per-part value tuples, +1 first, then 0, then -1."""
    check_assignment(spec, a)
    if isinstance(a, SignedAssignment):
        for p, n in zip(a.plus_counts, spec.sizes):
            yield (1,) * p + (-1,) * (n - p)
    else:
        for plus, zero, minus in a.counts:
            yield (1,) * plus + (0,) * zero + (-1,) * minus


def expand(spec: PartitionSpec, a: Assignment) -> tuple[int, ...]:
    return tuple(v for part in iter_part_values(spec, a) for v in part)


def weight(spec: PartitionSpec, a: Assignment) -> int:
    return sum(a.part_sums(spec))
