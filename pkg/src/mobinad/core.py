"""Core value types: marks, exact scalars, mobinads, triples, hesitant sets.

A *mobinad* is a real number ("standard part") tagged with a mark that says
which of its one-sided infinitesimal neighborhoods belong to the value:
the points just below, the point itself, and/or the points just above.
Seven nonempty combinations exist, so there are exactly seven marks.

Scalars are exact rationals (``fractions.Fraction``); an :class:`Approx`
scalar with directed rational bounds is used only for the standard part of
non-integer power results, where the true value is irrational.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

__all__ = [
    "Mark",
    "Approx",
    "Scalar",
    "Mobinad",
    "NeutrosophicTriple",
    "HesitantSet",
    "OrderResult",
    "MobinadParseError",
    "make_mobinad",
    "as_scalar",
    "scalar_text",
    "format_mobinad",
    "parse_mobinad",
    "mobinad_to_json",
    "mobinad_from_json",
    "triple_to_json",
    "triple_from_json",
]

# Component signs: -1 = points below the standard part, 0 = the point
# itself, +1 = points above.  A mark is a nonempty frozenset of these.
BELOW = -1
POINT = 0
ABOVE = 1


class Mark(Enum):
    """The seven neighborhood shapes a mobinad can carry.

    Text forms (used in ``^{...}`` suffixes and JSON): ``0`` plain real,
    ``-`` left monad, ``-0`` left monad closed to the right, ``+`` right
    monad, ``0+`` right monad closed to the left, ``-+`` pierced binad,
    ``-0+`` unpierced binad.
    """

    STD = "0"
    L = "-"
    L0 = "-0"
    R = "+"
    R0 = "0+"
    LR = "-+"
    L0R = "-0+"

    @property
    def text(self) -> str:
        return self.value

    @property
    def components(self) -> frozenset[int]:
        return _MARK_COMPONENTS[self]

    @property
    def has_below(self) -> bool:
        return BELOW in self.components

    @property
    def has_point(self) -> bool:
        return POINT in self.components

    @property
    def has_above(self) -> bool:
        return ABOVE in self.components

    @classmethod
    def from_components(cls, components: frozenset[int]) -> "Mark":
        """Inverse of :attr:`components`; rejects the empty set."""
        try:
            return _COMPONENTS_MARK[frozenset(components)]
        except KeyError:
            raise ValueError(f"no mark for component set {set(components)!r}") from None

    @classmethod
    def from_text(cls, text: str) -> "Mark":
        try:
            return cls(text)
        except ValueError:
            raise MobinadParseError(f"unknown mark string {text!r}") from None

    def __str__(self) -> str:
        return self.value


_MARK_COMPONENTS: dict[Mark, frozenset[int]] = {
    Mark.STD: frozenset({POINT}),
    Mark.L: frozenset({BELOW}),
    Mark.L0: frozenset({BELOW, POINT}),
    Mark.R: frozenset({ABOVE}),
    Mark.R0: frozenset({POINT, ABOVE}),
    Mark.LR: frozenset({BELOW, ABOVE}),
    Mark.L0R: frozenset({BELOW, POINT, ABOVE}),
}
_COMPONENTS_MARK = {v: k for k, v in _MARK_COMPONENTS.items()}

_TEN40 = Fraction(1, 10**40)


@dataclass(frozen=True)
class Approx:
    """Directed rational bounds on an irrational scalar: true value in [lo, hi].

    Width must stay below 1e-40 of the magnitude, tight enough that every
    order decision made through an Approx either resolves or fails loudly.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("Approx bounds out of order")
        mag = max(abs(self.lo), abs(self.hi))
        if mag and (self.hi - self.lo) > mag * _TEN40:
            raise ValueError("Approx bounds too loose")

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, digits: int = 50) -> str:
        from mpmath import mp, mpf

        with mp.workdps(digits):
            return mp.nstr(
                mpf(self.midpoint.numerator) / mpf(self.midpoint.denominator),
                digits,
            )

    def __str__(self) -> str:
        return "~" + self.decimal()


Scalar = Union[Fraction, Approx]


def as_scalar(value) -> Scalar:
    """Coerce ints, exact strings, Fractions, or Approx into a Scalar.

    Floats are rejected: the kernel is exact and a float would silently
    smuggle binary rounding into it.
    """
    if isinstance(value, (Fraction, Approx)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or string instead")
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def scalar_text(value: Scalar) -> str:
    """Canonical text: lowest-terms decimal when exact, else ``p/q``."""
    if isinstance(value, Approx):
        return str(value)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    if value.denominator == 1:
        return str(value.numerator)
    k = max(twos, fives)
    scaled = abs(value.numerator) * 10**k // value.denominator
    digits = str(scaled).rjust(k + 1, "0")
    whole, frac = digits[:-k], digits[-k:].rstrip("0")
    sign = "-" if value < 0 else ""
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


@dataclass(frozen=True)
class Mobinad:
    """An exact standard part plus the mark naming its neighborhood shape."""

    value: Scalar
    mark: Mark = Mark.STD

    def __post_init__(self) -> None:
        if not isinstance(self.value, (Fraction, Approx)):
            object.__setattr__(self, "value", as_scalar(self.value))
        if not isinstance(self.mark, Mark):
            raise TypeError(f"mark must be a Mark, got {self.mark!r}")

    def with_mark(self, mark: Mark) -> "Mobinad":
        return Mobinad(self.value, mark)

    def __str__(self) -> str:
        return format_mobinad(self)

    def __repr__(self) -> str:
        return f"Mobinad({scalar_text(self.value)!r}, {self.mark.name})"

    # Arithmetic delegates to the kernel; imported lazily to keep the
    # dependency direction core <- arithmetic.
    def __add__(self, other: "Mobinad") -> "Mobinad":
        from . import arithmetic

        return arithmetic.add(self, _coerce(other))

    def __sub__(self, other: "Mobinad") -> "Mobinad":
        from . import arithmetic

        return arithmetic.sub(self, _coerce(other))

    def __mul__(self, other: "Mobinad") -> "Mobinad":
        from . import arithmetic

        return arithmetic.mul(self, _coerce(other))

    def __truediv__(self, other: "Mobinad") -> "Mobinad":
        from . import arithmetic

        return arithmetic.div(self, _coerce(other))

    def __pow__(self, other: "Mobinad") -> "Mobinad":
        from . import arithmetic

        return arithmetic.pow_(self, _coerce(other))


def _coerce(value) -> Mobinad:
    if isinstance(value, Mobinad):
        return value
    return Mobinad(as_scalar(value))


def make_mobinad(value, mark: Mark = Mark.STD) -> Mobinad:
    """Build a mobinad from any exact value representation."""
    return Mobinad(as_scalar(value), mark)


@dataclass(frozen=True)
class NeutrosophicTriple:
    """Degrees of truth, indeterminacy, and falsehood.

    No range or sum constraint is enforced at construction; components may
    leave [0, 1] and are checked by the validation predicates instead.
    """

    t: Mobinad
    i: Mobinad
    f: Mobinad

    def __str__(self) -> str:
        return f"({self.t}, {self.i}, {self.f})"


@dataclass(frozen=True)
class HesitantSet:
    """A finite nonempty collection of mobinads.

    A proper hesitant set has at least two elements; a singleton degenerates
    to its mobinad.
    """

    elements: tuple[Mobinad, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("hesitant set must be nonempty")
        object.__setattr__(self, "elements", tuple(self.elements))

    @property
    def is_proper(self) -> bool:
        return len(self.elements) >= 2

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


class OrderResult(Enum):
    LESS = "less"
    GREATER = "greater"
    ORDER_EQUIVALENT = "order-equivalent"
    INCOMPARABLE = "incomparable"

    def __str__(self) -> str:
        return self.value


class MobinadParseError(ValueError):
    """Raised for malformed mobinad text (bad number or mark string)."""


# --- text I/O -------------------------------------------------------------
#
# Canonical form renders the mark as a caret suffix, e.g. 0.3^{0+}, since
# plain text has no over-diacritics.  The lateral forms (-a), (a+), (0a+),
# (-a0), (-a+), (-a0+) are accepted on input as aliases; they are easy to
# misread next to negative numbers, which is exactly why the caret form is
# canonical.

_NUMBER = r"-?\d+(?:\.\d+)?(?:/\d+)?"
_CARET_RE = re.compile(rf"^(?P<num>{_NUMBER})(?:\^\{{(?P<mark>[0+-]+)\}})?$")
_LATERAL_RE = re.compile(
    rf"^\((?P<below>-)?(?P<lpoint>0)?(?P<num>\d+(?:\.\d+)?(?:/\d+)?)"
    r"(?P<rpoint>0)?(?P<above>\+)?\)$"
)


def _parse_number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MobinadParseError(f"bad numeric value {text!r}: {exc}") from None


def format_mobinad(x: Mobinad) -> str:
    """Canonical text; the plain-real mark is left implicit."""
    body = scalar_text(x.value)
    if x.mark is Mark.STD:
        return body
    return f"{body}^{{{x.mark.text}}}"


def parse_mobinad(text: str) -> Mobinad:
    """Parse canonical or lateral mobinad text."""
    text = text.strip()
    m = _CARET_RE.match(text)
    if m:
        mark = Mark.from_text(m.group("mark")) if m.group("mark") else Mark.STD
        return Mobinad(_parse_number(m.group("num")), mark)
    m = _LATERAL_RE.match(text)
    if m:
        components = set()
        if m.group("below"):
            components.add(BELOW)
        if m.group("lpoint") or m.group("rpoint"):
            components.add(POINT)
        if m.group("above"):
            components.add(ABOVE)
        if not components:
            components.add(POINT)
        return Mobinad(_parse_number(m.group("num")), Mark.from_components(frozenset(components)))
    raise MobinadParseError(f"cannot parse mobinad text {text!r}")


# --- JSON -----------------------------------------------------------------
#
# Canonical schema: {"value": {"num": "<int>", "den": "<int>"}, "mark": "<markstr>"}.
# Approx values (non-integer power results only) serialize their directed
# bounds instead of a num/den pair.


def _scalar_to_json(value: Scalar) -> dict:
    if isinstance(value, Approx):
        return {
            "approx": {
                "decimal": value.decimal(),
                "lo": {"num": str(value.lo.numerator), "den": str(value.lo.denominator)},
                "hi": {"num": str(value.hi.numerator), "den": str(value.hi.denominator)},
            }
        }
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _scalar_from_json(obj: dict) -> Scalar:
    if "approx" in obj:
        inner = obj["approx"]
        return Approx(
            Fraction(int(inner["lo"]["num"]), int(inner["lo"]["den"])),
            Fraction(int(inner["hi"]["num"]), int(inner["hi"]["den"])),
        )
    return Fraction(int(obj["num"]), int(obj["den"]))


def mobinad_to_json(x: Mobinad) -> dict:
    return {"value": _scalar_to_json(x.value), "mark": x.mark.text}


def mobinad_from_json(obj) -> Mobinad:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Mobinad(_scalar_from_json(obj["value"]), Mark.from_text(obj["mark"]))


def triple_to_json(p: NeutrosophicTriple) -> dict:
    return {"t": mobinad_to_json(p.t), "i": mobinad_to_json(p.i), "f": mobinad_to_json(p.f)}


def triple_from_json(obj) -> NeutrosophicTriple:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return NeutrosophicTriple(
        mobinad_from_json(obj["t"]),
        mobinad_from_json(obj["i"]),
        mobinad_from_json(obj["f"]),
    )
