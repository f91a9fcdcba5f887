"""Signed, signed total and minus domination in complete multipartite graphs."""

from .formulas import (
    classify,
    domination_number,
    minus_domination_number,
    signed_domination_number,
    signed_total_domination_number,
)
from .model import (
    AssignmentError,
    ExplicitGraph,
    MinusAssignment,
    PartitionSpec,
    SignedAssignment,
    SpecStats,
    UnsupportedSpecError,
    Variant,
    build_graph,
    expand,
    stats,
    weight,
)
from .oracle import (
    BudgetExceededError,
    naive_oracle,
    oracle,
    oracle_minus,
    oracle_signed,
    oracle_signed_total,
)
from .witness import (
    ValidityReport,
    minus_witness,
    signed_total_witness,
    signed_witness,
    verify,
    witness,
)

__version__ = "0.1.0"
