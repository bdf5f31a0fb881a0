"""Arbitrary-precision reals with certified error bounds.

A ``BigReal`` is a rational midpoint plus a rational radius that is
guaranteed to contain the true value.  Arithmetic propagates radii
conservatively, so any strict comparison between two ``BigReal`` values
whose intervals are disjoint is a proof.  Roots are produced by integer
Newton iteration on a scaled target, which certifies the enclosure by
construction (the floor root r satisfies r^n <= scaled target < (r+1)^n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class BigReal:
    mid: Fraction
    err: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mid", Fraction(self.mid))
        object.__setattr__(self, "err", Fraction(self.err))
        if self.err < 0:
            raise ValueError("error radius must be nonnegative")

    @classmethod
    def exact(cls, x: Rational) -> "BigReal":
        return cls(Fraction(x), Fraction(0))

    # -- interval endpoints -------------------------------------------

    @property
    def lower(self) -> Fraction:
        return self.mid - self.err

    @property
    def upper(self) -> Fraction:
        return self.mid + self.err

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "BigReal | None":
        if isinstance(other, BigReal):
            return other
        if isinstance(other, (int, Fraction)):
            return BigReal.exact(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BigReal(self.mid + o.mid, self.err + o.err)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BigReal(self.mid - o.mid, self.err + o.err)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return BigReal(-self.mid, self.err)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        err = abs(self.mid) * o.err + abs(o.mid) * self.err + self.err * o.err
        return BigReal(self.mid * o.mid, err)

    __rmul__ = __mul__

    def __abs__(self):
        if self.lower >= 0:
            return self
        if self.upper <= 0:
            return -self
        hi = max(-self.lower, self.upper)
        return BigReal(hi / 2, hi / 2)

    def __pow__(self, k: int) -> "BigReal":
        if k < 0:
            raise ValueError("negative powers not supported")
        result = BigReal.exact(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- certified comparisons ------------------------------------------

    def strictly_less(self, other: "BigReal | Rational") -> bool:
        """True iff the intervals prove self < other."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare with {other!r}")
        return self.upper < o.lower

    def strictly_greater(self, other: "BigReal | Rational") -> bool:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare with {other!r}")
        return self.lower > o.upper

    def separates(self, other: "BigReal | Rational") -> bool:
        """True iff the two intervals are disjoint (an order is certified)."""
        return self.strictly_less(other) or self.strictly_greater(other)

    def contains(self, x: Rational) -> bool:
        x = Fraction(x)
        return self.lower <= x <= self.upper

    def __repr__(self) -> str:
        return f"BigReal({to_decimal_string(self.mid, 20)} ± {float(self.err):.2e})"


def integer_nth_root(a: int, n: int) -> int:
    """floor(a**(1/n)) for a >= 0, by Newton iteration on integers."""
    if a < 0:
        raise ValueError("negative radicand")
    if n <= 0:
        raise ValueError("root order must be positive")
    if a < 2 or n == 1:
        return a
    if n == 2:
        return math.isqrt(a)
    x = 1 << -(-a.bit_length() // n)  # 2**ceil(bits/n) >= true root
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    # x is within one step of the floor root; settle it exactly
    while x**n > a:
        x -= 1
    while (x + 1) ** n <= a:
        x += 1
    return x


GUARD_DIGITS = 20


def nth_root(x: "Rational | BigReal", n: int, max_error: Rational) -> BigReal:
    """Certified n-th root of a nonnegative rational or BigReal.

    The result's radius is at most ``max_error`` (plus the propagated input
    radius for interval inputs); exact rational roots are detected and
    returned with radius 0.
    """
    if isinstance(x, BigReal):
        if x.err == 0:
            return nth_root(x.mid, n, max_error)
        if x.lower < 0:
            raise ValueError("nth_root requires a nonnegative radicand")
        lo = nth_root(x.lower, n, max_error)
        hi = nth_root(x.upper, n, max_error)
        mid = (lo.lower + hi.upper) / 2
        return BigReal(mid, hi.upper - mid)
    x = Fraction(x)
    if x < 0:
        raise ValueError("nth_root requires a nonnegative radicand")
    if n <= 0:
        raise ValueError("root order must be positive")
    max_error = Fraction(max_error)
    if max_error <= 0:
        raise ValueError("max_error must be positive")
    if x == 0:
        return BigReal.exact(0)

    num, den = x.numerator, x.denominator
    rn = integer_nth_root(num, n)
    rd = integer_nth_root(den, n)
    if rn**n == num and rd**n == den:
        return BigReal.exact(Fraction(rn, rd))

    digits = GUARD_DIGITS
    e = max_error
    while e < 1:
        e *= 10
        digits += 1
    scale = 10**digits
    target = (num * scale**n) // den
    r = integer_nth_root(target, n)
    # certificate: the true root lies in [r/scale, (r+1)/scale)
    if not (r**n <= target < (r + 1) ** n):
        raise AssertionError("integer root certificate failed")
    return BigReal(Fraction(2 * r + 1, 2 * scale), Fraction(1, 2 * scale))


def sqrt(x: Rational, max_error: Rational) -> BigReal:
    return nth_root(x, 2, max_error)


def to_decimal_string(x: Rational, sig_digits: int) -> str:
    """Decimal rendering of an exact rational to ``sig_digits`` significant digits.

    Rounds half away from zero; never passes through floating point.
    """
    if sig_digits < 1:
        raise ValueError("need at least one significant digit")
    x = Fraction(x)
    if x == 0:
        return "0." + "0" * (sig_digits - 1)
    sign = "-" if x < 0 else ""
    x = abs(x)
    # exponent e with 10^e <= x < 10^(e+1)
    e = len(str(x.numerator)) - len(str(x.denominator))
    while 10**e > x:
        e -= 1
    while 10 ** (e + 1) <= x:
        e += 1
    # round x / 10^(e - sig + 1) to nearest integer
    shift = e - sig_digits + 1
    scaled = x / Fraction(10) ** shift
    digits = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    s = str(digits)
    if len(s) > sig_digits:  # rounding carried over, e.g. 999.6 -> 1000
        e += 1
        s = s[:-1]
    if e >= sig_digits - 1:
        intpart = s + "0" * (e - sig_digits + 1)
        return sign + intpart
    if e >= 0:
        return sign + s[: e + 1] + "." + s[e + 1 :]
    return sign + "0." + "0" * (-e - 1) + s
