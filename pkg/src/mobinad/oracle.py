"""Concrete interval semantics for mobinads, used as the arithmetic oracle.

Every mark maps to one or two tiny rational-endpoint intervals around the
standard part (the left monad of a becomes (a - eps, a), and so on).  An
arithmetic operation is then literally the set image {x * y}, computed
piecewise over boxes with exact endpoint analysis, and the resulting point
set is classified back into a mark by where its points sit relative to the
exact standard-part result.

The classification is independent of the sampled epsilon scale as long as
nonzero operand magnitudes stay well above it; the default scale is 2**-30.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .core import ABOVE, BELOW, POINT, Approx, Mark, Mobinad
from .powers import EndpointValue, PowValue, approx_pow, cmp_values, pow_value

__all__ = [
    "RatInterval",
    "EpsSample",
    "MarkTable",
    "DivisorStraddlesZero",
    "NonpositivePowerBase",
    "DivisionByZeroNeighborhood",
    "EmptySetError",
    "ScaleViolation",
    "DELTA",
    "OPS",
    "REGIMES",
    "sample_family",
    "mu_n",
    "interval_op",
    "classify",
    "classify_components",
    "oracle_op",
    "oracle_components",
    "derive_mark_table",
]

DELTA = Fraction(1, 2**30)
OPS = ("add", "sub", "mul", "div", "pow")
REGIMES = ("pos-pos", "pos-neg", "neg-pos", "neg-neg")


class DivisorStraddlesZero(ArithmeticError):
    """The divisor interval touches or crosses zero; the image is unbounded."""


class NonpositivePowerBase(ArithmeticError):
    """Power base interval is not strictly positive."""


class DivisionByZeroNeighborhood(ZeroDivisionError):
    """Any mobinad with standard part 0 is rejected as a divisor."""


class EmptySetError(ValueError):
    """Classification of an empty interval set."""


class ScaleViolation(ArithmeticError):
    """An image endpoint escaped the infinitesimal window: a kernel bug."""


def _cmp(x: EndpointValue, y: EndpointValue) -> int:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return (x > y) - (x < y)
    return cmp_values(x, y)


@dataclass(frozen=True)
class RatInterval:
    """Interval with per-endpoint open/closed flags.

    Endpoints are exact: rationals, or symbolic rational powers when the
    interval is a power-operation image.  A degenerate interval (lo == hi)
    must be closed on both sides: the point [a, a].
    """

    lo: EndpointValue
    hi: EndpointValue
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self) -> None:
        side = _cmp(self.lo, self.hi)
        if side > 0:
            raise ValueError(f"interval endpoints out of order: {self}")
        if side == 0 and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval must be closed on both sides")

    @staticmethod
    def point(value: EndpointValue) -> "RatInterval":
        return RatInterval(value, value, False, False)

    def contains(self, value: EndpointValue) -> bool:
        lo_side = _cmp(value, self.lo)
        hi_side = _cmp(value, self.hi)
        if lo_side < 0 or hi_side > 0:
            return False
        if lo_side == 0 and self.lo_open:
            return False
        if hi_side == 0 and self.hi_open:
            return False
        return True

    def __str__(self) -> str:
        from .core import scalar_text

        def text(v: EndpointValue) -> str:
            return str(v) if isinstance(v, PowValue) else scalar_text(v)

        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{text(self.lo)}, {text(self.hi)}{right}"


@dataclass(frozen=True)
class EpsSample:
    """One choice of the two positive infinitesimal stand-ins."""

    eps1: Fraction
    eps2: Fraction

    def __post_init__(self) -> None:
        if self.eps1 <= 0 or self.eps2 <= 0:
            raise ValueError("epsilon samples must be positive")


def sample_family(delta: Fraction = DELTA) -> tuple[EpsSample, ...]:
    """Equal and extreme-ratio epsilon pairs.

    Image endpoints are degree-<=2 polynomials in (eps1, eps2); the pairs
    (d, d), (d, d^2), (d^2, d) jointly realize every achievable sign of the
    deviation from the standard-part result.
    """
    return (
        EpsSample(delta, delta),
        EpsSample(delta, delta * delta),
        EpsSample(delta * delta, delta),
    )


def mu_n(x: Mobinad, eps: Fraction) -> tuple[RatInterval, ...]:
    """Interval representative(s) of a mobinad at a given epsilon."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    a = x.value
    if not isinstance(a, Fraction):
        raise TypeError("interval semantics needs an exact rational standard part")
    mark = x.mark
    if mark is Mark.STD:
        return (RatInterval.point(a),)
    if mark is Mark.L:
        return (RatInterval(a - eps, a, True, True),)
    if mark is Mark.L0:
        return (RatInterval(a - eps, a, True, False),)
    if mark is Mark.R:
        return (RatInterval(a, a + eps, True, True),)
    if mark is Mark.R0:
        return (RatInterval(a, a + eps, False, True),)
    if mark is Mark.LR:
        return (
            RatInterval(a - eps, a, True, True),
            RatInterval(a, a + eps, True, True),
        )
    return (RatInterval(a - eps, a + eps, True, True),)


def _require_rational(iv_: RatInterval, op: str) -> None:
    if not (isinstance(iv_.lo, Fraction) and isinstance(iv_.hi, Fraction)):
        raise TypeError(f"{op} requires rational interval endpoints")


def _corner_extremes(corners: Sequence[tuple[EndpointValue, bool]]):
    """(value, attained) for min and max over corner (value, closed) pairs.

    A tie is attained if any corner realizing it is fully closed.
    """
    lo_val, lo_att = corners[0]
    hi_val, hi_att = corners[0]
    for value, closed in corners[1:]:
        side = _cmp(value, lo_val)
        if side < 0:
            lo_val, lo_att = value, closed
        elif side == 0:
            lo_att = lo_att or closed
        side = _cmp(value, hi_val)
        if side > 0:
            hi_val, hi_att = value, closed
        elif side == 0:
            hi_att = hi_att or closed

    return (lo_val, lo_att), (hi_val, hi_att)


def _corner_interval(a: RatInterval, b: RatInterval, value_fn, special) -> RatInterval:
    """Box image for an op monotone in each variable separately.

    ``special`` maps an extreme value to True when it is attained along a
    constant edge (e.g. 0 for products when 0 lies in a factor interval),
    overriding the corner openness.
    """
    corners = []
    for x, x_open in ((a.lo, a.lo_open), (a.hi, a.hi_open)):
        for y, y_open in ((b.lo, b.lo_open), (b.hi, b.hi_open)):
            corners.append((value_fn(x, y), not (x_open or y_open)))
    (lo, lo_att), (hi, hi_att) = _corner_extremes(corners)
    lo_att = lo_att or special(lo)
    hi_att = hi_att or special(hi)
    if _cmp(lo, hi) == 0 and not (lo_att and hi_att):
        # a degenerate image can only arise from attained endpoints
        raise AssertionError("degenerate open image")
    return RatInterval(lo, hi, not lo_att, not hi_att)


def interval_op(op: str, a: RatInterval, b: RatInterval) -> RatInterval:
    """Exact image interval {x * y : x in A, y in B} with endpoint openness.

    An endpoint is open iff no point of the actual set attains it.  Division
    rejects divisor intervals whose closure contains zero (the image would
    be unbounded); power requires the base interval strictly positive.
    """
    if op == "add":
        _require_rational(a, op), _require_rational(b, op)
        return RatInterval(
            a.lo + b.lo, a.hi + b.hi, a.lo_open or b.lo_open, a.hi_open or b.hi_open
        )
    if op == "sub":
        _require_rational(a, op), _require_rational(b, op)
        return RatInterval(
            a.lo - b.hi, a.hi - b.lo, a.lo_open or b.hi_open, a.hi_open or b.lo_open
        )
    if op == "mul":
        _require_rational(a, op), _require_rational(b, op)
        zero = Fraction(0)
        return _corner_interval(
            a,
            b,
            lambda x, y: x * y,
            lambda m: m == zero and (a.contains(zero) or b.contains(zero)),
        )
    if op == "div":
        _require_rational(a, op), _require_rational(b, op)
        zero = Fraction(0)
        if b.lo <= 0 <= b.hi:
            raise DivisorStraddlesZero(f"divisor interval {b} touches zero")
        return _corner_interval(
            a, b, lambda x, y: x / y, lambda m: m == zero and a.contains(zero)
        )
    if op == "pow":
        _require_rational(a, op), _require_rational(b, op)
        if a.lo < 0 or (a.lo == 0 and not a.lo_open):
            raise NonpositivePowerBase(f"base interval {a} is not strictly positive")
        if a.lo == 0:
            raise NonpositivePowerBase(
                f"base interval {a} reaches down to zero; image endpoints degenerate"
            )
        one = Fraction(1)
        return _corner_interval(
            a,
            b,
            pow_value,
            lambda m: _cmp(m, one) == 0 and (a.contains(one) or b.contains(Fraction(0))),
        )
    raise ValueError(f"unknown operation {op!r}")


def classify_components(
    intervals: Iterable[RatInterval],
    s: EndpointValue,
    window: Optional[Fraction] = None,
) -> frozenset[int]:
    """Which of {below, point, above} relative to s the interval set covers."""
    intervals = tuple(intervals)
    if not intervals:
        raise EmptySetError("cannot classify an empty interval set")
    components = set()
    for iv_ in intervals:
        if window is not None:
            for endpoint in (iv_.lo, iv_.hi):
                if isinstance(endpoint, Fraction) and isinstance(s, Fraction):
                    if abs(endpoint - s) > window:
                        raise ScaleViolation(
                            f"endpoint {endpoint} of {iv_} is {abs(endpoint - s)} "
                            f"away from {s}, beyond window {window}"
                        )
        if _cmp(iv_.lo, s) < 0:
            components.add(BELOW)
        if iv_.contains(s):
            components.add(POINT)
        if _cmp(iv_.hi, s) > 0:
            components.add(ABOVE)
    if not components:
        # only possible by construction bugs: a nonempty set around s with
        # no points anywhere relative to s cannot exist
        raise ScaleViolation(f"interval set {intervals} has no points relative to {s}")
    return frozenset(components)


def classify(
    intervals: Iterable[RatInterval],
    s: EndpointValue,
    window: Optional[Fraction] = None,
) -> Mark:
    return Mark.from_components(classify_components(intervals, s, window))


def _standard_part(op: str, a: Fraction, b: Fraction) -> EndpointValue:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return pow_value(a, b)
    raise ValueError(f"unknown operation {op!r}")


def _deviation_window(op: str, a: Fraction, b: Fraction, sample: EpsSample):
    """Over-approximation of how far image endpoints may drift from s.

    Used as the classification tripwire.  Power images are built from exact
    corner values, so no window is needed there.
    """
    e1, e2 = sample.eps1, sample.eps2
    if op in ("add", "sub"):
        return 2 * (e1 + e2)
    if op == "mul":
        return 2 * (abs(b) * e1 + abs(a) * e2 + e1 * e2)
    if op == "div":
        if abs(b) <= e2:
            return None
        return 2 * (e1 + abs(a / b) * e2) / (abs(b) - e2)
    return None


def oracle_components(
    op: str,
    x: Mobinad,
    y: Mobinad,
    delta: Fraction = DELTA,
) -> frozenset[int]:
    """Union of per-sample classifications of the piecewise image set."""
    a, b = x.value, y.value
    if not (isinstance(a, Fraction) and isinstance(b, Fraction)):
        raise TypeError("oracle operands need exact rational standard parts")
    if op == "div" and b == 0:
        raise DivisionByZeroNeighborhood(
            "divisor neighborhoods at 0 make the image unbounded"
        )
    if op == "pow" and a <= 0:
        raise NonpositivePowerBase("power base must be strictly positive")
    s = _standard_part(op, a, b)
    components: set[int] = set()
    for sample in sample_family(delta):
        pieces = [
            interval_op(op, ai, bj)
            for ai, bj in itertools.product(mu_n(x, sample.eps1), mu_n(y, sample.eps2))
        ]
        window = _deviation_window(op, a, b, sample)
        components |= classify_components(pieces, s, window)
    return frozenset(components)


def oracle_op(op: str, x: Mobinad, y: Mobinad, delta: Fraction = DELTA) -> Mobinad:
    """Exact-set-semantics result: standard part plus classified mark."""
    mark = Mark.from_components(oracle_components(op, x, y, delta))
    value = _standard_part(op, x.value, y.value)
    if isinstance(value, PowValue):
        value = Approx(*approx_pow(value.base, value.expo))
    return Mobinad(value, mark)


# --- mark tables -----------------------------------------------------------

MARK_ORDER = (Mark.STD, Mark.L, Mark.L0, Mark.R, Mark.R0, Mark.LR, Mark.L0R)

_PRIMARY_PAIR = (Fraction(3, 2), Fraction(5, 4))
# chosen across the base-1 boundary so power cells whose mark depends on the
# base's position relative to 1 get flagged value-dependent
_SECONDARY_PAIR = (Fraction(1, 2), Fraction(1, 4))


def _regime_values(regime: str, pair: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    try:
        sa, sb = {"pos-pos": (1, 1), "pos-neg": (1, -1), "neg-pos": (-1, 1), "neg-neg": (-1, -1)}[
            regime
        ]
    except KeyError:
        raise ValueError(f"unknown sign regime {regime!r}") from None
    return sa * pair[0], sb * pair[1]


@dataclass(frozen=True)
class MarkTable:
    """7x7 grid of result marks for one operation in one sign regime.

    ``cells[i][j]`` is the mark for operand marks (MARK_ORDER[i],
    MARK_ORDER[j]) at the regime's representative values, or None where the
    operation's preconditions fail.  ``value_dependent[i][j]`` is True when
    re-deriving at a second value pair inside the regime changes the mark.
    """

    op: str
    regime: str
    cells: tuple[tuple[Optional[Mark], ...], ...]
    value_dependent: tuple[tuple[bool, ...], ...]

    def cell(self, mx: Mark, my: Mark) -> Optional[Mark]:
        return self.cells[MARK_ORDER.index(mx)][MARK_ORDER.index(my)]

    def is_value_dependent(self, mx: Mark, my: Mark) -> bool:
        return self.value_dependent[MARK_ORDER.index(mx)][MARK_ORDER.index(my)]

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "regime": self.regime,
            "axis": [m.text for m in MARK_ORDER],
            "cells": [
                ["ERR" if cell is None else cell.text for cell in row] for row in self.cells
            ],
            "value_dependent": [list(row) for row in self.value_dependent],
        }

    def to_text(self) -> str:
        """Aligned grid; * marks value-dependent cells."""
        header = [f"{self.op} {self.regime} (rows: left operand, cols: right operand)"]
        labels = [m.text for m in MARK_ORDER]
        body = []
        for i, row in enumerate(self.cells):
            rendered = []
            for j, cell in enumerate(row):
                text = "ERR" if cell is None else cell.text
                if self.value_dependent[i][j]:
                    text += "*"
                rendered.append(text)
            body.append((labels[i], rendered))
        width = max(
            [len(lbl) for lbl in labels]
            + [len(text) for _, rendered in body for text in rendered]
        )
        lines = header
        lines.append(
            " " * (width + 2) + " ".join(lbl.rjust(width) for lbl in labels)
        )
        for lbl, rendered in body:
            lines.append(
                lbl.rjust(width + 2) + " " + " ".join(t.rjust(width) for t in rendered)
            )
        if any(any(row) for row in self.value_dependent):
            lines.append("(* = mark changes with operand values inside this regime)")
        return "\n".join(lines)


def _derive_cells(op: str, values: tuple[Fraction, Fraction], delta: Fraction):
    a, b = values
    grid = []
    for mx in MARK_ORDER:
        row = []
        for my in MARK_ORDER:
            try:
                row.append(oracle_op(op, Mobinad(a, mx), Mobinad(b, my), delta).mark)
            except (ArithmeticError, ZeroDivisionError):
                row.append(None)
        grid.append(tuple(row))
    return tuple(grid)


@lru_cache(maxsize=None)
def derive_mark_table(op: str, regime: str, delta: Fraction = DELTA) -> MarkTable:
    """Materialize the closure behavior of one op in one sign regime."""
    if op not in OPS:
        raise ValueError(f"unknown operation {op!r}")
    primary = _derive_cells(op, _regime_values(regime, _PRIMARY_PAIR), delta)
    secondary = _derive_cells(op, _regime_values(regime, _SECONDARY_PAIR), delta)
    flags = tuple(
        tuple(
            p is not None and q is not None and p is not q
            for p, q in zip(prow, qrow)
        )
        for prow, qrow in zip(primary, secondary)
    )
    return MarkTable(op, regime, primary, flags)
