"""Triple-valued logic connectives lifted to mobinad components.

Three t-norm/t-conorm families (min/max via the lattice operations,
product/probabilistic-sum via exact arithmetic, Lukasiewicz via clipped
sums), three combination variants for the indeterminacy component, and two
negations.  The default configuration (product/sum family, variant B,
component-swap negation) is the one whose formulas the worked numeric
examples follow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arithmetic import add, mul, scalar_mul, sub
from .core import HesitantSet, Mark, Mobinad, NeutrosophicTriple
from .order import inf1, inf_n, inf_n_many, leq, sup1, sup_n, sup_n_many

__all__ = [
    "FAMILIES",
    "VARIANTS",
    "NEGATIONS",
    "ConnectiveConfig",
    "DEFAULT_CONFIG",
    "ValidationReport",
    "tnorm",
    "tconorm",
    "and_n",
    "or_n",
    "not_n",
    "implies_n",
    "equiv_n",
    "validate_triple",
    "hesitant_bounds",
]

FAMILIES = ("minmax", "prodsum", "lukasiewicz")
VARIANTS = ("A", "B", "plithogenic")
NEGATIONS = ("swap", "complement")

_ZERO = Mobinad(Fraction(0))
_ONE = Mobinad(Fraction(1))
_ONE_ABOVE = Mobinad(Fraction(1), Mark.R)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ConnectiveConfig:
    """Choice of t-norm family, indeterminacy variant, and negation.

    The plithogenic variant weighs the indeterminacy combination by the
    fixed contradiction degrees c(T,F)=1 and c(T,I)=c(F,I)=1/2, yielding the
    half-and-half mix of the t-norm and t-conorm.
    """

    family: str = "prodsum"
    variant: str = "B"
    negation: str = "swap"

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.negation not in NEGATIONS:
            raise ValueError(f"unknown negation {self.negation!r}")

    def to_json(self) -> dict:
        return {"family": self.family, "variant": self.variant, "negation": self.negation}

    @classmethod
    def from_json(cls, obj: dict) -> "ConnectiveConfig":
        return cls(
            obj.get("family", "prodsum"),
            obj.get("variant", "B"),
            obj.get("negation", "swap"),
        )


DEFAULT_CONFIG = ConnectiveConfig()


def tnorm(family: str, x: Mobinad, y: Mobinad, strategy: str = "reduction") -> Mobinad:
    if family == "minmax":
        return inf_n(x, y, strategy)
    if family == "prodsum":
        return mul(x, y)
    if family == "lukasiewicz":
        return sup_n(sub(add(x, y), _ONE), _ZERO, strategy)
    raise ValueError(f"unknown family {family!r}")


def tconorm(family: str, x: Mobinad, y: Mobinad, strategy: str = "reduction") -> Mobinad:
    if family == "minmax":
        return sup_n(x, y, strategy)
    if family == "prodsum":
        # a + b - a*b, evaluated on mobinads
        return sub(add(x, y), mul(x, y))
    if family == "lukasiewicz":
        return inf_n(add(x, y), _ONE, strategy)
    raise ValueError(f"unknown family {family!r}")


def _combine_i(
    cfg: ConnectiveConfig,
    i1: Mobinad,
    i2: Mobinad,
    conjunction: bool,
    strategy: str,
) -> Mobinad:
    tn = tnorm(cfg.family, i1, i2, strategy)
    tc = tconorm(cfg.family, i1, i2, strategy)
    if cfg.variant == "A":
        return tn if conjunction else tc
    if cfg.variant == "B":
        return tc if conjunction else tn
    return add(scalar_mul(_HALF, tn), scalar_mul(_HALF, tc))


def and_n(
    cfg: ConnectiveConfig,
    p: NeutrosophicTriple,
    q: NeutrosophicTriple,
    strategy: str = "reduction",
) -> NeutrosophicTriple:
    return NeutrosophicTriple(
        tnorm(cfg.family, p.t, q.t, strategy),
        _combine_i(cfg, p.i, q.i, True, strategy),
        tconorm(cfg.family, p.f, q.f, strategy),
    )


def or_n(
    cfg: ConnectiveConfig,
    p: NeutrosophicTriple,
    q: NeutrosophicTriple,
    strategy: str = "reduction",
) -> NeutrosophicTriple:
    return NeutrosophicTriple(
        tconorm(cfg.family, p.t, q.t, strategy),
        _combine_i(cfg, p.i, q.i, False, strategy),
        tnorm(cfg.family, p.f, q.f, strategy),
    )


def not_n(cfg: ConnectiveConfig, p: NeutrosophicTriple) -> NeutrosophicTriple:
    """Swap: exchange truth and falsehood (marks ride along).

    Complement: additionally replace indeterminacy by its distance below
    the nonstandard unit top, 1-above minus I.
    """
    if cfg.negation == "swap":
        return NeutrosophicTriple(p.f, p.i, p.t)
    return NeutrosophicTriple(p.f, sub(_ONE_ABOVE, p.i), p.t)


def implies_n(
    cfg: ConnectiveConfig,
    p: NeutrosophicTriple,
    q: NeutrosophicTriple,
    strategy: str = "reduction",
) -> NeutrosophicTriple:
    return or_n(cfg, not_n(cfg, p), q, strategy)


def equiv_n(
    cfg: ConnectiveConfig,
    p: NeutrosophicTriple,
    q: NeutrosophicTriple,
    strategy: str = "reduction",
) -> NeutrosophicTriple:
    """Biconditional as the conjunction of the two implications."""
    return and_n(
        cfg,
        implies_n(cfg, p, q, strategy),
        implies_n(cfg, q, p, strategy),
        strategy,
    )


# --- triple validation ------------------------------------------------------

LEVELS = ("standard", "nonstandard", "offset")


@dataclass(frozen=True)
class ValidationReport:
    """Range membership per component plus the infinitesimally-relaxed sum
    window: 0-below <= sum of lower reaches, sum of upper reaches <= 3-above.
    """

    level: str
    t_in: bool
    i_in: bool
    f_in: bool
    sum_lower: Mobinad
    sum_upper: Mobinad
    sum_lower_ok: bool
    sum_upper_ok: bool
    psi: Optional[Fraction] = None
    omega: Optional[Fraction] = None

    @property
    def components_ok(self) -> bool:
        return self.t_in and self.i_in and self.f_in

    @property
    def valid(self) -> bool:
        return self.components_ok and self.sum_lower_ok and self.sum_upper_ok

    def to_json(self) -> dict:
        from .core import mobinad_to_json, scalar_text

        out = {
            "level": self.level,
            "components": {"t": self.t_in, "i": self.i_in, "f": self.f_in},
            "sum": {
                "lower": mobinad_to_json(self.sum_lower),
                "upper": mobinad_to_json(self.sum_upper),
                "lower_ok": self.sum_lower_ok,
                "upper_ok": self.sum_upper_ok,
            },
            "valid": self.valid,
        }
        if self.level == "offset":
            out["psi"] = scalar_text(self.psi)
            out["omega"] = scalar_text(self.omega)
        return out


def _within_bounds(c: Mobinad, lo: Fraction, hi: Fraction) -> bool:
    """Neighborhood-aware containment of a mobinad in a closed real interval.

    At an endpoint the component pointing outward (below at the lower bound,
    above at the upper) disqualifies the value.
    """
    v = c.value
    if not isinstance(v, Fraction):
        raise TypeError("validation needs exact rational components")
    if v < lo or v > hi:
        return False
    if v == lo and c.mark.has_below:
        return False
    if v == hi and c.mark.has_above:
        return False
    return True


def validate_triple(
    p: NeutrosophicTriple,
    level: str = "nonstandard",
    psi: Optional[Fraction] = None,
    omega: Optional[Fraction] = None,
    strategy: str = "reduction",
) -> ValidationReport:
    if level not in LEVELS:
        raise ValueError(f"unknown validation level {level!r}")
    if level == "offset":
        if psi is None or omega is None:
            raise ValueError("offset validation needs psi and omega")
        if not (psi <= 0 < 1 <= omega):
            raise ValueError("offset bounds must satisfy psi <= 0 < 1 <= omega")
        in_range = [_within_bounds(c, psi, omega) for c in (p.t, p.i, p.f)]
    elif level == "standard":
        in_range = [_within_bounds(c, Fraction(0), Fraction(1)) for c in (p.t, p.i, p.f)]
    else:
        from .order import is_in_unit

        in_range = [is_in_unit(c) for c in (p.t, p.i, p.f)]
    sum_lower = add(add(inf1(p.t), inf1(p.i)), inf1(p.f))
    sum_upper = add(add(sup1(p.t), sup1(p.i)), sup1(p.f))
    zero_below = Mobinad(Fraction(0), Mark.L)
    three_above = Mobinad(Fraction(3), Mark.R)
    return ValidationReport(
        level,
        in_range[0],
        in_range[1],
        in_range[2],
        sum_lower,
        sum_upper,
        leq(zero_below, sum_lower),
        leq(sum_upper, three_above),
        psi if level == "offset" else None,
        omega if level == "offset" else None,
    )


def hesitant_bounds(h: HesitantSet, strategy: str = "reduction") -> tuple[Mobinad, Mobinad]:
    """Neutrosophic infimum and supremum of a hesitant set.

    The folded bound is reduced to its one-sided reach, so a singleton
    yields (inf1, sup1) of its element.
    """
    lo = inf1(inf_n_many(h.elements, strategy))
    hi = sup1(sup_n_many(h.elements, strategy))
    return lo, hi
