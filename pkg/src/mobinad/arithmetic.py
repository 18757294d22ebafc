"""Exact mobinad arithmetic: sign-rule fast path with the oracle as fallback.

The result's standard part is computed exactly.  Its mark comes from a
first-order perturbation argument: each operand contributes a deviation
whose sign is the product of the partial-derivative sign with the chosen
neighborhood side.  Agreeing contributions keep their side, a zero
contribution defers to the other operand, and conflicting contributions
smear the result across the whole neighborhood (below, point, and above).

When a partial derivative vanishes while that operand has off-point
components, first order says nothing; those calls fall back to the
interval oracle, which settles them by brute force.
"""

from __future__ import annotations

from fractions import Fraction

from .core import ABOVE, BELOW, POINT, Approx, Mark, Mobinad
from .oracle import (
    DELTA,
    DivisionByZeroNeighborhood,
    NonpositivePowerBase,
    derive_mark_table,
    oracle_components,
)
from .powers import PowValue, approx_pow, pow_value

__all__ = [
    "ZeroPartialAmbiguity",
    "sign_rule",
    "add",
    "sub",
    "mul",
    "div",
    "pow_",
    "scalar_mul",
    "apply_op",
    "cached_mark_table",
]


class ZeroPartialAmbiguity(ArithmeticError):
    """First-order analysis is blind here; the caller must use the oracle."""


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _partial_signs(op: str, a: Fraction, b: Fraction) -> tuple[int, int]:
    """Signs of d(op)/dx and d(op)/dy at (a, b)."""
    if op == "add":
        return 1, 1
    if op == "sub":
        return 1, -1
    if op == "mul":
        return _sign(b), _sign(a)
    if op == "div":
        # d(x/y)/dx = 1/y, d(x/y)/dy = -x/y**2
        return _sign(b), -_sign(a)
    if op == "pow":
        # d(x**y)/dx = y*x**(y-1) > 0 iff y > 0;  d/dy = x**y * ln x
        return _sign(b), _sign(a - 1)
    raise ValueError(f"unknown operation {op!r}")


def sign_rule(
    op: str,
    a: Fraction,
    b: Fraction,
    sx: frozenset[int],
    sy: frozenset[int],
) -> frozenset[int]:
    """Result component set from operand component sets via partial signs.

    Requires each zero-partial side to contribute only the point component;
    otherwise raises ZeroPartialAmbiguity.
    """
    fx, fy = _partial_signs(op, a, b)
    if fx == 0 and sx != frozenset({POINT}):
        raise ZeroPartialAmbiguity(f"{op} at ({a}, {b}): left deviation invisible")
    if fy == 0 and sy != frozenset({POINT}):
        raise ZeroPartialAmbiguity(f"{op} at ({a}, {b}): right deviation invisible")
    out: set[int] = set()
    for s1 in sx:
        for s2 in sy:
            d1, d2 = fx * s1, fy * s2
            if d1 == 0 and d2 == 0:
                out.add(POINT)
            elif d1 == 0 or d2 == 0 or d1 == d2:
                out.add(d1 or d2)
            else:
                out.update((BELOW, POINT, ABOVE))
    return frozenset(out)


def _kernel_mark(op: str, x: Mobinad, y: Mobinad) -> Mark:
    try:
        components = sign_rule(op, x.value, y.value, x.mark.components, y.mark.components)
    except ZeroPartialAmbiguity:
        components = oracle_components(op, x, y)
    return Mark.from_components(components)


def _require_rational(x: Mobinad, op: str) -> Fraction:
    if not isinstance(x.value, Fraction):
        raise TypeError(f"{op} needs exact rational operands, got {x.value!r}")
    return x.value


def add(x: Mobinad, y: Mobinad) -> Mobinad:
    a, b = _require_rational(x, "add"), _require_rational(y, "add")
    return Mobinad(a + b, _kernel_mark("add", x, y))


def sub(x: Mobinad, y: Mobinad) -> Mobinad:
    a, b = _require_rational(x, "sub"), _require_rational(y, "sub")
    return Mobinad(a - b, _kernel_mark("sub", x, y))


def mul(x: Mobinad, y: Mobinad) -> Mobinad:
    a, b = _require_rational(x, "mul"), _require_rational(y, "mul")
    return Mobinad(a * b, _kernel_mark("mul", x, y))


def div(x: Mobinad, y: Mobinad) -> Mobinad:
    a, b = _require_rational(x, "div"), _require_rational(y, "div")
    if b == 0:
        raise DivisionByZeroNeighborhood(
            "every neighborhood of 0 touches or straddles 0; division undefined"
        )
    return Mobinad(a / b, _kernel_mark("div", x, y))


def pow_(x: Mobinad, y: Mobinad) -> Mobinad:
    a, b = _require_rational(x, "pow"), _require_rational(y, "pow")
    if a <= 0:
        raise NonpositivePowerBase("power base must be strictly positive")
    value = pow_value(a, b)
    if isinstance(value, PowValue):
        value = Approx(*approx_pow(value.base, value.expo))
    return Mobinad(value, _kernel_mark("pow", x, y))


def scalar_mul(c, x: Mobinad) -> Mobinad:
    """Multiply by a plain scalar: identical to mul((c, plain), x)."""
    from .core import as_scalar

    return mul(Mobinad(as_scalar(c)), x)


_OP_FUNCS = {"add": add, "sub": sub, "mul": mul, "div": div, "pow": pow_}


def apply_op(op: str, x: Mobinad, y: Mobinad) -> Mobinad:
    try:
        fn = _OP_FUNCS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(x, y)


def cached_mark_table(op: str, regime: str, delta: Fraction = DELTA):
    """Derived-once mark table; see oracle.derive_mark_table."""
    return derive_mark_table(op, regime, delta)
