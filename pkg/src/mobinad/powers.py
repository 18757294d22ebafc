"""Exact ordering of rational powers a**b (a > 0 rational, b rational).

Power images of tiny intervals produce endpoint values like
(a + u)**(b + v) that are irrational, yet their order relative to each
other and to a**b must be decided exactly for classification to be exact.
The comparison b1*ln(a1) vs b2*ln(a2) is resolved by:

1. structural shortcuts (equal bases, equal exponents, base 1, exponent 0),
2. an exact equality test via primitive radicals: a1**b1 == a2**b2 with
   a1, a2 != 1 forces a1 = r**k1 and a2 = r**k2 for one primitive r > 1
   with k1*b1 == k2*b2,
3. otherwise rigorous interval evaluation at escalating precision, which
   terminates because step 2 already ruled out equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2
from mpmath import iv
from mpmath.libmp import fzero, mpf_cmp

__all__ = ["PowValue", "EndpointValue", "pow_value", "cmp_values", "approx_pow"]

_MAX_PREC = 1 << 16


@dataclass(frozen=True)
class PowValue:
    """Symbolic a**b, kept exact; base > 0, exponent non-integer."""

    base: Fraction
    expo: Fraction

    def __str__(self) -> str:
        return f"{self.base}^{self.expo}"


EndpointValue = Union[Fraction, PowValue]


def pow_value(base: Fraction, expo: Fraction) -> EndpointValue:
    """a**b, collapsed to an exact Fraction whenever one exists."""
    if base <= 0:
        raise ValueError("pow_value requires a positive base")
    if expo == 0 or base == 1:
        return Fraction(1)
    if expo.denominator == 1:
        return base ** expo.numerator
    root, k = primitive_radical(base)
    # base**expo = root**(k*expo); exact iff k*expo is an integer.
    scaled = k * expo
    if scaled.denominator == 1:
        return root ** scaled.numerator
    return PowValue(base, expo)


def _largest_power_index(n: int) -> int:
    """Largest e with n a perfect e-th power (n >= 2)."""
    best = 1
    for e in range(2, n.bit_length() + 1):
        _, exact = gmpy2.iroot(n, e)
        if exact:
            best = e
    return best


@lru_cache(maxsize=None)
def primitive_radical(q: Fraction) -> tuple[Fraction, int]:
    """Decompose q = r**k with r > 1 primitive and k a nonzero integer.

    q must be positive and != 1.  Two rational powers can only be equal if
    their primitive radicals coincide.
    """
    if q <= 0 or q == 1:
        raise ValueError("primitive_radical requires q > 0, q != 1")
    if q < 1:
        r, k = primitive_radical(1 / q)
        return r, -k
    n, d = q.numerator, q.denominator
    k = _largest_power_index(n)
    if d > 1:
        k = _gcd(k, _largest_power_index(d))
    root_n = int(gmpy2.iroot(n, k)[0])
    root_d = int(gmpy2.iroot(d, k)[0])
    return Fraction(root_n, root_d), k


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _powers_equal(p: PowValue, q: PowValue) -> bool:
    r1, k1 = primitive_radical(p.base)
    r2, k2 = primitive_radical(q.base)
    return r1 == r2 and k1 * p.expo == k2 * q.expo


def _iv_fraction(f: Fraction):
    return iv.mpf(f.numerator) / iv.mpf(f.denominator)


def _log_term(value: EndpointValue):
    """Rigorous enclosure of ln(value) at the current iv precision."""
    if isinstance(value, PowValue):
        return _iv_fraction(value.expo) * iv.log(_iv_fraction(value.base))
    return iv.log(_iv_fraction(value))


def _cmp_via_logs(x: EndpointValue, y: EndpointValue) -> int:
    old_prec = iv.prec
    try:
        prec = 128
        while prec <= _MAX_PREC:
            iv.prec = prec
            diff = _log_term(x) - _log_term(y)
            lo, hi = diff._mpi_
            if mpf_cmp(lo, fzero) > 0:
                return 1
            if mpf_cmp(hi, fzero) < 0:
                return -1
            prec *= 2
    finally:
        iv.prec = old_prec
    raise ArithmeticError(f"cannot separate {x} and {y} at {_MAX_PREC} bits")


@lru_cache(maxsize=65536)
def _cmp_pow_pow(p: PowValue, q: PowValue) -> int:
    if p.base == q.base:
        # monotone in the exponent; base != 1 guaranteed by construction
        expo_side = 1 if p.expo > q.expo else (-1 if p.expo < q.expo else 0)
        base_side = 1 if p.base > 1 else -1
        return expo_side * base_side
    if p.expo == q.expo:
        base_side = 1 if p.base > q.base else -1
        expo_side = 1 if p.expo > 0 else -1
        return base_side * expo_side
    if _powers_equal(p, q):
        return 0
    return _cmp_via_logs(p, q)


@lru_cache(maxsize=65536)
def _cmp_pow_frac(p: PowValue, f: Fraction) -> int:
    if f <= 0:
        return 1
    if f == 1:
        # p.base != 1 and p.expo non-integer nonzero, so p != 1 exactly
        up = (p.base > 1) == (p.expo > 0)
        return 1 if up else -1
    r1, k1 = primitive_radical(p.base)
    r2, k2 = primitive_radical(f)
    if r1 == r2 and k1 * p.expo == Fraction(k2):
        return 0
    return _cmp_via_logs(p, f)


def cmp_values(x: EndpointValue, y: EndpointValue) -> int:
    """Exact three-way comparison of power-or-rational values."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return 1 if x > y else (-1 if x < y else 0)
    if isinstance(x, PowValue) and isinstance(y, PowValue):
        return _cmp_pow_pow(x, y)
    if isinstance(x, PowValue):
        return _cmp_pow_frac(x, y)
    return -_cmp_pow_frac(y, x)


def approx_pow(base: Fraction, expo: Fraction, rel_width: Fraction = Fraction(1, 10**45)):
    """Directed rational bounds (lo, hi) on base**expo, relative width <= rel_width."""
    if base <= 0:
        raise ValueError("approx_pow requires a positive base")
    old_prec = iv.prec
    try:
        prec = 192
        while prec <= _MAX_PREC:
            iv.prec = prec
            enclosure = iv.exp(_iv_fraction(expo) * iv.log(_iv_fraction(base)))
            lo_t, hi_t = enclosure._mpi_
            lo, hi = _mpf_tuple_to_fraction(lo_t), _mpf_tuple_to_fraction(hi_t)
            if hi - lo <= rel_width * min(abs(lo), abs(hi)):
                return lo, hi
            prec *= 2
    finally:
        iv.prec = old_prec
    raise ArithmeticError(f"cannot bound {base}^{expo} tightly enough")


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    f = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -f if sign else f
