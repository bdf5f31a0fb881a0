"""Growth constants for forest counts of d-regular graphs, certified.

Three constants per degree d:

* the conjectured optimum  (d-1)^(d-1) / (d^2-2d-1)^(d/2-1),
* the proven matching-based bound  S^(1/(d+1))  where
  S = sum_k (-1)^k m_k(K_{d+1}) 2^k (d+1)^(d+1-2k)  is an exact integer,
* the elementary reference value  d - 1/(2d).

Every numeric value is a BigReal with a certified radius; every inequality
this module reports is decided either on exact integers or on disjoint
intervals, with automatic precision escalation when intervals overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import PrecisionError
from .exactreal import BigReal, nth_root, sqrt
from .reporting import CheckRecord, VerificationReport

MAX_CERTIFIED_DIGITS = 256


def _half_power(base: int, numerator: int, digits: int) -> BigReal:
    """base^(numerator/2) for integer base >= 1, certified.

    Even numerator is exact; odd goes through one certified square root
    (never through exp/log).
    """
    if numerator % 2 == 0:
        return BigReal.exact(Fraction(base) ** (numerator // 2))
    whole = Fraction(base) ** ((numerator - 1) // 2)
    root = sqrt(base, Fraction(1, 10 ** (digits + 5)) / whole)
    return root * whole


def conjecture_constant(d: int, digits: int = 20) -> BigReal:
    """(d-1)^(d-1) / (d^2-2d-1)^(d/2-1); exact rational for even d."""
    if d < 3:
        raise ValueError("defined for d >= 3 (needs d^2 - 2d - 1 > 0)")
    num = (d - 1) ** (d - 1)
    base = d * d - 2 * d - 1
    # divide by base^((d-2)/2): for odd d multiply by sqrt(base)/base^((d-1)/2)
    if d % 2 == 0:
        return BigReal.exact(Fraction(num, base ** ((d - 2) // 2)))
    ratio = Fraction(num, base ** ((d - 1) // 2))
    root = sqrt(base, Fraction(1, 10 ** (digits + 5)) / ratio)
    return root * ratio


def mckay_tree_constant(d: int, digits: int = 20) -> BigReal:
    """The spanning-tree growth constant (d-1)^(d-1) / (d^2-2d)^(d/2-1)."""
    if d < 3:
        raise ValueError("defined for d >= 3")
    num = (d - 1) ** (d - 1)
    base = d * d - 2 * d
    if d % 2 == 0:
        return BigReal.exact(Fraction(num, base ** ((d - 2) // 2)))
    ratio = Fraction(num, base ** ((d - 1) // 2))
    root = sqrt(base, Fraction(1, 10 ** (digits + 5)) / ratio)
    return root * ratio


def matching_bound_integer(n: int) -> int:
    """S_n = sum_k (-1)^k m_k(K_n) 2^k n^(n-2k), an exact (positive) integer."""
    if n < 5:
        raise ValueError("defined for n >= 5")
    total = 0
    for k in range(n // 2 + 1):
        mk = math.factorial(n) // ((1 << k) * math.factorial(k) * math.factorial(n - 2 * k))
        term = mk * (1 << k) * n ** (n - 2 * k)
        total += -term if k % 2 else term
    return total


def matching_bound_constant(d: int, digits: int = 20) -> BigReal:
    """The proven per-vertex bound: S_{d+1}^(1/(d+1))."""
    if d < 4:
        raise ValueError("defined for d >= 4")
    n = d + 1
    return nth_root(matching_bound_integer(n), n, Fraction(1, 10 ** digits))


def simple_reference_bound(d: int) -> Fraction:
    """d - 1/(2d), the elementary comparison value."""
    if d < 1:
        raise ValueError("d must be positive")
    return Fraction(d) - Fraction(1, 2 * d)


def conjecture_series(d: int) -> Fraction:
    """Truncated expansion d - 1/(2d) - 1/(3d^2) - 1/(8d^3)."""
    if d < 1:
        raise ValueError("d must be positive")
    return Fraction(d) - Fraction(1, 2 * d) - Fraction(1, 3 * d * d) - Fraction(1, 8 * d**3)


def kahale_schulman_series(d: int) -> Fraction:
    """The printed series d + 1/2 + 1/(8d) + 13/(48d^2) of the earlier bound.

    Only the truncation is available here; it is evaluated as such and never
    passed off as the underlying constant.
    """
    if d < 1:
        raise ValueError("d must be positive")
    return Fraction(d) + Fraction(1, 2) + Fraction(1, 8 * d) + Fraction(13, 48 * d * d)


def expansion_check(d: int, which: str = "conjecture") -> BigReal:
    """|constant - truncated series| for the conjecture constant, or the
    bare series value for the earlier bound (no independent constant exists
    in scope for the latter)."""
    if d < 4:
        raise ValueError("d must be >= 4")
    if which == "conjecture":
        diff = conjecture_constant(d, digits=40) - conjecture_series(d)
        return abs(diff)
    if which == "kahale_schulman":
        return BigReal.exact(kahale_schulman_series(d))
    raise ValueError(f"unknown expansion kind {which!r}")


@dataclass(frozen=True)
class BoundRow:
    d: int
    conjecture: BigReal
    matching_bound: BigReal
    simple_bound: Fraction
    bound_integer: int  # S_{d+1}


def table1(d_min: int, d_max: int, digits: int = 15) -> list[BoundRow]:
    """One row per degree: the three constants plus the exact integer S_{d+1}."""
    if not 4 <= d_min <= d_max:
        raise ValueError("need 4 <= d_min <= d_max")
    if digits > 30:
        raise ValueError("digits capped at 30")
    internal = max(16, digits + 2)
    rows = []
    for d in range(d_min, d_max + 1):
        rows.append(
            BoundRow(
                d=d,
                conjecture=conjecture_constant(d, internal),
                matching_bound=matching_bound_constant(d, internal),
                simple_bound=simple_reference_bound(d),
                bound_integer=matching_bound_integer(d + 1),
            )
        )
    return rows


def verify_key_inequality(n_min: int, n_max: int) -> VerificationReport:
    """Exact check S_n < (n-1)^n for each n in [n_min, n_max].

    The n = d+1 >= 5 convention makes 5 the smallest meaningful n even
    though the stated computer-checkable range historically began at 4.
    """
    if not 5 <= n_min <= n_max:
        raise ValueError("need 5 <= n_min <= n_max")
    checks = []
    for n in range(n_min, n_max + 1):
        s = matching_bound_integer(n)
        bound = (n - 1) ** n
        checks.append(
            CheckRecord(
                claim=f"key-integer-inequality/n={n}",
                inputs=f"n={n}",
                expected=f"S_n < {bound}",
                actual=str(s),
                passed=0 < s < bound,
                margin=str(bound - s),
            )
        )
    return VerificationReport(suite="key-inequality", checks=checks)


def certified_less(
    make_left: Callable[[int], BigReal],
    make_right: Callable[[int], BigReal],
    start_digits: int = 20,
) -> bool:
    """Decide left < right with interval certificates, doubling precision
    (up to MAX_CERTIFIED_DIGITS) until the intervals separate."""
    digits = start_digits
    while digits <= MAX_CERTIFIED_DIGITS:
        left = make_left(digits)
        right = make_right(digits)
        if left.strictly_less(right):
            return True
        if left.strictly_greater(right):
            return False
        digits *= 2
    raise PrecisionError(f"comparison undecided at {MAX_CERTIFIED_DIGITS} digits")


def forest_growth_below_conjecture(forest_total: int, v: int, d: int) -> bool:
    """Exact test of F^(1/v) < (d-1)^(d-1) / (d^2-2d-1)^(d/2-1).

    Cross-multiplied into integers: F^2 * (d^2-2d-1)^((d-2)v) <
    (d-1)^(2(d-1)v); no roots, no rounding.
    """
    if d < 3:
        raise ValueError("defined for d >= 3")
    if v < 1 or forest_total < 1:
        raise ValueError("need a nonempty graph and a positive count")
    lhs = forest_total**2 * (d * d - 2 * d - 1) ** ((d - 2) * v)
    rhs = (d - 1) ** (2 * (d - 1) * v)
    return lhs < rhs
