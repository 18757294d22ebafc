"""Partial order, infimum/supremum, and interval predicates for mobinads.

Two mobinads at distinct standard parts always order by value, whatever
their marks.  At equal values, a mark is summarized by a rank pair: how far
its lowest reach extends (below / at / above the point) and likewise its
highest reach.  Componentwise rank comparison reproduces the one-sided
chains (left monad below the plain real below the right monad, closed
monads in between) and leaves the plain real incomparable with both binads.
The pierced and unpierced binads share rank pairs, so they compare as
order-equivalent while remaining unequal as sets.

Two strategies are provided for the binary infimum/supremum at equal
values:

* ``reduction`` (default): fold each operand to its one-sided bound first
  (left monad if it reaches below, else the point, else the right monad)
  and take the smaller.  Absorption can fail for composite marks; the
  violations are enumerable via :func:`absorption_report`.
* ``order-first``: return the dominated operand outright whenever the pair
  is comparable, falling back to reduction otherwise.  This restores the
  absorption laws on comparable pairs and the bounded-interval identity
  laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional

from .core import Approx, HesitantSet, Mark, Mobinad, OrderResult, Scalar

__all__ = [
    "STRATEGIES",
    "MobinadInterval",
    "AbsorptionViolation",
    "compare",
    "leq",
    "inf1",
    "sup1",
    "inf_n",
    "sup_n",
    "inf_n_many",
    "sup_n_many",
    "membership",
    "interval_inclusion",
    "hesitant_inclusion",
    "hesitant_equality",
    "unit_interval",
    "is_in_unit",
    "classical_inf",
    "classical_sup",
    "absorption_report",
]

STRATEGIES = ("reduction", "order-first")


def _cmp_scalar(a: Scalar, b: Scalar) -> int:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    alo, ahi = (a.lo, a.hi) if isinstance(a, Approx) else (a, a)
    blo, bhi = (b.lo, b.hi) if isinstance(b, Approx) else (b, b)
    if (alo, ahi) == (blo, bhi):
        return 0
    if ahi < blo:
        return -1
    if bhi < alo:
        return 1
    raise ArithmeticError(f"approximate values {a} and {b} overlap; order undecidable")


def _rank(mark: Mark) -> tuple[int, int]:
    lo = -1 if mark.has_below else (0 if mark.has_point else 1)
    hi = 1 if mark.has_above else (0 if mark.has_point else -1)
    return lo, hi


def compare(x: Mobinad, y: Mobinad) -> OrderResult:
    """Neutrosophic order: by value first, by neighborhood ranks at ties."""
    side = _cmp_scalar(x.value, y.value)
    if side < 0:
        return OrderResult.LESS
    if side > 0:
        return OrderResult.GREATER
    rx, ry = _rank(x.mark), _rank(y.mark)
    if rx == ry:
        return OrderResult.ORDER_EQUIVALENT
    if rx[0] <= ry[0] and rx[1] <= ry[1]:
        return OrderResult.LESS
    if rx[0] >= ry[0] and rx[1] >= ry[1]:
        return OrderResult.GREATER
    return OrderResult.INCOMPARABLE


def leq(x: Mobinad, y: Mobinad) -> bool:
    return compare(x, y) in (OrderResult.LESS, OrderResult.ORDER_EQUIVALENT)


def inf1(x: Mobinad) -> Mobinad:
    """One-sided lower bound: the lowest reach of the neighborhood."""
    mark = Mark.L if x.mark.has_below else (Mark.STD if x.mark.has_point else Mark.R)
    return Mobinad(x.value, mark)


def sup1(x: Mobinad) -> Mobinad:
    """One-sided upper bound: the highest reach of the neighborhood."""
    mark = Mark.R if x.mark.has_above else (Mark.STD if x.mark.has_point else Mark.L)
    return Mobinad(x.value, mark)


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown lattice strategy {strategy!r}")


def inf_n(x: Mobinad, y: Mobinad, strategy: str = "reduction") -> Mobinad:
    _check_strategy(strategy)
    if strategy == "order-first":
        if leq(x, y):
            return x
        if leq(y, x):
            return y
    side = _cmp_scalar(x.value, y.value)
    if side < 0:
        return inf1(x)
    if side > 0:
        return inf1(y)
    if x.mark is y.mark:
        return x
    ix, iy = inf1(x), inf1(y)
    return ix if leq(ix, iy) else iy


def sup_n(x: Mobinad, y: Mobinad, strategy: str = "reduction") -> Mobinad:
    _check_strategy(strategy)
    if strategy == "order-first":
        if leq(y, x):
            return x
        if leq(x, y):
            return y
    side = _cmp_scalar(x.value, y.value)
    if side > 0:
        return sup1(x)
    if side < 0:
        return sup1(y)
    if x.mark is y.mark:
        return x
    sx, sy = sup1(x), sup1(y)
    return sx if leq(sy, sx) else sy


def inf_n_many(items: Iterable[Mobinad], strategy: str = "reduction") -> Mobinad:
    items = list(items)
    if not items:
        raise ValueError("infimum of an empty collection")
    return reduce(lambda acc, item: inf_n(acc, item, strategy), items)


def sup_n_many(items: Iterable[Mobinad], strategy: str = "reduction") -> Mobinad:
    items = list(items)
    if not items:
        raise ValueError("supremum of an empty collection")
    return reduce(lambda acc, item: sup_n(acc, item, strategy), items)


@dataclass(frozen=True)
class MobinadInterval:
    """All mobinads between two bounds, inclusive under the partial order."""

    lower: Mobinad
    upper: Mobinad

    def __post_init__(self) -> None:
        if not leq(self.lower, self.upper):
            raise ValueError(f"interval bounds out of order: {self.lower} !<= {self.upper}")

    def __str__(self) -> str:
        return f"]{self.lower}, {self.upper}["


def membership(c: Mobinad, interval: MobinadInterval) -> bool:
    return leq(interval.lower, c) and leq(c, interval.upper)


def interval_inclusion(a: MobinadInterval, b: MobinadInterval, strict: bool = False) -> bool:
    """Is every element of a inside b?  Strict needs one strictly tighter bound."""
    included = leq(b.lower, a.lower) and leq(a.upper, b.upper)
    if not strict:
        return included
    return included and (
        compare(b.lower, a.lower) is OrderResult.LESS
        or compare(a.upper, b.upper) is OrderResult.LESS
    )


def _element_of(x: Mobinad, h: HesitantSet) -> bool:
    # set equality of mobinads: equal value and equal mark
    return any(x == e for e in h)


def hesitant_inclusion(a: HesitantSet, b: HesitantSet, strict: bool = False) -> bool:
    included = all(_element_of(x, b) for x in a)
    if not strict:
        return included
    return included and any(not _element_of(y, a) for y in b)


def hesitant_equality(a: HesitantSet, b: HesitantSet) -> bool:
    return hesitant_inclusion(a, b) and hesitant_inclusion(b, a)


def unit_interval() -> MobinadInterval:
    """From the left monad of 0 up to the right monad of 1."""
    return MobinadInterval(Mobinad(Fraction(0), Mark.L), Mobinad(Fraction(1), Mark.R))


def is_in_unit(x: Mobinad) -> bool:
    return membership(x, unit_interval())


def classical_inf(values: Iterable[Scalar]) -> Scalar:
    """Plain minimum of a finite standard set (the order-theoretic baseline)."""
    values = list(values)
    if not values:
        raise ValueError("infimum of an empty set")
    return min(values)


def classical_sup(values: Iterable[Scalar]) -> Scalar:
    values = list(values)
    if not values:
        raise ValueError("supremum of an empty set")
    return max(values)


@dataclass(frozen=True)
class AbsorptionViolation:
    law: str
    x: Mobinad
    y: Mobinad
    result: Mobinad


def absorption_report(
    strategy: str = "reduction",
    value: Optional[Fraction] = None,
    comparable_only: bool = False,
) -> list[AbsorptionViolation]:
    """Enumerate absorption-law failures over all mark pairs at one value.

    Both laws are checked: inf(x, sup(x, y)) == x and sup(x, inf(x, y)) == x,
    with == as set equality.  Under the reduction strategy the list is
    nonempty (closed monads and binads get flattened); under order-first it
    is empty once restricted to comparable pairs.
    """
    _check_strategy(strategy)
    a = Fraction(1, 2) if value is None else value
    violations = []
    for mx in Mark:
        for my in Mark:
            x, y = Mobinad(a, mx), Mobinad(a, my)
            if comparable_only and compare(x, y) is OrderResult.INCOMPARABLE:
                continue
            got = inf_n(x, sup_n(x, y, strategy), strategy)
            if got != x:
                violations.append(AbsorptionViolation("inf-absorbs-sup", x, y, got))
            got = sup_n(x, inf_n(x, y, strategy), strategy)
            if got != x:
                violations.append(AbsorptionViolation("sup-absorbs-inf", x, y, got))
    return violations
