"""Exact arithmetic, ordering, and logic over marked reals (mobinads)."""

from .core import (
    Approx,
    HesitantSet,
    Mark,
    Mobinad,
    MobinadParseError,
    NeutrosophicTriple,
    OrderResult,
    Scalar,
    format_mobinad,
    make_mobinad,
    mobinad_from_json,
    mobinad_to_json,
    parse_mobinad,
    triple_from_json,
    triple_to_json,
)
from .arithmetic import add, div, mul, pow_, scalar_mul, sub
from .oracle import (
    DELTA,
    DivisionByZeroNeighborhood,
    DivisorStraddlesZero,
    EpsSample,
    MarkTable,
    NonpositivePowerBase,
    RatInterval,
    ScaleViolation,
    classify,
    derive_mark_table,
    interval_op,
    mu_n,
    oracle_op,
)
from .order import (
    MobinadInterval,
    compare,
    hesitant_equality,
    hesitant_inclusion,
    inf1,
    inf_n,
    interval_inclusion,
    is_in_unit,
    leq,
    membership,
    sup1,
    sup_n,
    unit_interval,
)
from .logic import (
    ConnectiveConfig,
    ValidationReport,
    and_n,
    equiv_n,
    hesitant_bounds,
    implies_n,
    not_n,
    or_n,
    tconorm,
    tnorm,
    validate_triple,
)

__version__ = "0.1.0"
