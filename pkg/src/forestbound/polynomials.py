"""Exact univariate polynomial arithmetic over arbitrary-precision integers.

``IntPolynomial`` is a dense, immutable coefficient vector (index = power,
no trailing zeros).  On top of it this module provides the pieces the rest
of the package leans on: exact evaluation, composition with ``z + a``,
Newton-identity power sums of the roots of a monic polynomial, and Sturm
real-root counting over exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

NEG_INFINITY = float("-inf")


class IntPolynomial:
    """Dense polynomial with integer coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise ValueError(f"integer coefficient expected, got {c!r}")
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return self.scaled(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def __rmul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = IntPolynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scaled(self, c: int) -> "IntPolynomial":
        if c == 0:
            return IntPolynomial.zero()
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    # -- evaluation and composition -------------------------------------

    def eval_at(self, x: Scalar) -> Scalar:
        """Exact Horner evaluation; returns an int for int input."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a: int = 1) -> "IntPolynomial":
        """Return ``p(z + a)``, computed exactly by Horner composition."""
        result = IntPolynomial.zero()
        za = IntPolynomial((a, 1))
        for c in reversed(self.coeffs):
            result = result * za + IntPolynomial((c,))
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    # -- dunder plumbing -------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPolynomial(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"


def power_sums(p: IntPolynomial, k_max: int) -> list[int]:
    """Unnormalized power sums ``p_k = sum(root^k)`` of a monic polynomial.

    Computed from the coefficients by Newton's identities, so the values are
    exact integers.  ``p_0`` equals the degree.
    """
    if not p.is_monic():
        raise ValueError("power sums require a monic polynomial")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    n = len(p.coeffs) - 1
    c = p.coeffs  # c[n] == 1
    sums = [n]
    for k in range(1, k_max + 1):
        acc = 0
        for i in range(1, min(k - 1, n) + 1):
            acc += c[n - i] * sums[k - i]
        if k <= n:
            acc += k * c[n - k]
        sums.append(-acc)
    return sums


# -- Sturm sequences over exact rationals ------------------------------

def _frac_poly(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals (b nonzero)."""
    rem = list(a)
    db = len(b) - 1
    inv_lead = 1 / b[-1]
    while len(rem) - 1 >= db and rem:
        q = rem[-1] * inv_lead
        shift = len(rem) - 1 - db
        for i in range(db + 1):
            rem[shift + i] -= q * b[i]
        rem.pop()
        _trim(rem)
    return rem


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_rem(a, b)
        if b:
            # normalize to keep fraction sizes tame
            lead = b[-1]
            b = [c / lead for c in b]
    return a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """The product of p's distinct irreducible factors, primitive with positive lead."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if p.degree <= 1:
        cs = list(p.coeffs)
    else:
        fp = _frac_poly(p)
        g = _poly_gcd(fp, _frac_poly(p.derivative()))
        if len(g) - 1 <= 0:
            cs = list(p.coeffs)
        else:
            # exact division p / g; quotient coefficients are positional
            dg = len(g) - 1
            rem = list(fp)
            q: list[Fraction] = [Fraction(0)] * (len(rem) - dg)
            while rem and len(rem) - 1 >= dg:
                c = rem[-1] / g[-1]
                shift = len(rem) - 1 - dg
                q[shift] = c
                for i in range(dg + 1):
                    rem[shift + i] -= c * g[i]
                rem.pop()
                _trim(rem)
            if rem:
                raise AssertionError("gcd division left a remainder")
            cs = q  # type: ignore[assignment]
    # clear denominators, remove content, fix sign
    from math import gcd, lcm

    fracs = [Fraction(c) for c in cs]
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denom) for f in fracs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    if content:
        ints = [c // content for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(ints)


def _sign_variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for cs in chain:
        v: Fraction = Fraction(0)
        for c in reversed(cs):
            v = v * x + c
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def count_real_roots_in(p: IntPolynomial, a: Scalar, b: Scalar) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Uses the canonical Sturm chain of the squarefree part, evaluated over
    exact rationals, so the count is certified (no floating point anywhere).
    """
    a = Fraction(a)
    b = Fraction(b)
    if a >= b:
        raise ValueError("need a < b")
    if p.is_zero():
        raise ValueError("zero polynomial has no root count")
    sf = squarefree_part(p)
    if sf.degree < 1:
        return 0
    chain = [_frac_poly(sf), _frac_poly(sf.derivative())]
    while len(chain[-1]) - 1 > 0:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return _sign_variations(chain, a) - _sign_variations(chain, b)
