"""Certified interval arithmetic and integer-Newton roots."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forestbound import BigReal, integer_nth_root, nth_root, sqrt, to_decimal_string


class TestIntegerRoot:
    @given(st.integers(0, 10**30), st.integers(1, 12))
    @settings(max_examples=120)
    def test_floor_root_certificate(self, a, n):
        r = integer_nth_root(a, n)
        assert r**n <= a
        assert (r + 1) ** n > a

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            integer_nth_root(-1, 2)


class TestNthRoot:
    def test_exact_square(self):
        r = nth_root(4, 2, Fraction(1, 10**6))
        assert r.mid == 2 and r.err == 0

    def test_exact_rational_cube(self):
        r = nth_root(Fraction(8, 27), 3, Fraction(1, 10**6))
        assert r.mid == Fraction(2, 3) and r.err == 0

    def test_fifth_root_reference_value(self):
        r = nth_root(925, 5, Fraction(1, 10**13))
        assert r.err <= Fraction(1, 10**13)
        ref = Fraction("3.91947904192452")
        assert abs(r.mid - ref) < Fraction(1, 10**13)

    def test_sixth_root_reference_value(self):
        r = nth_root(14136, 6, Fraction(1, 10**13))
        ref = Fraction("4.91723641784679")
        assert abs(r.mid - ref) < Fraction(1, 10**13)

    @given(st.integers(2, 10**9), st.integers(2, 8))
    @settings(max_examples=80)
    def test_enclosure_contains_true_root(self, x, n):
        r = nth_root(x, n, Fraction(1, 10**10))
        assert r.lower**n <= x <= r.upper**n or r.err == 0 and r.mid**n == x

    def test_rejects_negative_radicand(self):
        with pytest.raises(ValueError):
            nth_root(-2, 2, Fraction(1, 100))

    def test_interval_input_propagates(self):
        x = BigReal(Fraction(4), Fraction(1, 100))
        r = nth_root(x, 2, Fraction(1, 10**8))
        assert r.lower**2 <= Fraction(399, 100)
        assert r.upper**2 >= Fraction(401, 100)
        assert r.contains(2)


class TestBigRealArithmetic:
    def test_addition_propagates_radius(self):
        a = BigReal(Fraction(1), Fraction(1, 100))
        b = BigReal(Fraction(2), Fraction(1, 50))
        assert (a + b).err == Fraction(3, 100)

    @given(
        st.fractions(min_value=-10, max_value=10),
        st.fractions(min_value=0, max_value=1),
        st.fractions(min_value=-10, max_value=10),
        st.fractions(min_value=0, max_value=1),
        st.fractions(min_value=-1, max_value=1),
        st.fractions(min_value=-1, max_value=1),
    )
    @settings(max_examples=100)
    def test_product_interval_sound(self, ma, ea, mb, eb, ta, tb):
        # any true values inside the operand intervals stay inside the product interval
        a = BigReal(ma, ea)
        b = BigReal(mb, eb)
        true_a = ma + ta * ea
        true_b = mb + tb * eb
        prod = a * b
        assert prod.lower <= true_a * true_b <= prod.upper

    def test_power_contains_truth(self):
        a = BigReal(Fraction(3, 2), Fraction(1, 1000))
        p = a**5
        assert p.lower <= Fraction(3, 2) ** 5 <= p.upper

    def test_strict_comparison_requires_separation(self):
        a = BigReal(Fraction(1), Fraction(1, 4))
        b = BigReal(Fraction(2), Fraction(1, 4))
        c = BigReal(Fraction(1), Fraction(2))
        assert a.strictly_less(b)
        assert not b.strictly_less(a)
        assert not a.strictly_less(c) and not a.strictly_greater(c)

    def test_error_never_below_true_deviation(self):
        # sqrt(2)^2 must contain 2 even after arithmetic
        r = sqrt(2, Fraction(1, 10**20))
        sq = r * r
        assert sq.lower <= 2 <= sq.upper

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            BigReal(Fraction(1), Fraction(-1))


class TestDecimalRendering:
    def test_reference_fraction(self):
        assert to_decimal_string(Fraction(27, 7), 15) == "3.85714285714286"

    def test_integer_value(self):
        assert to_decimal_string(Fraction(2), 6) == "2.00000"

    def test_small_value_leading_zeros(self):
        assert to_decimal_string(Fraction(1, 300), 4) == "0.003333"

    def test_rounding_carry(self):
        assert to_decimal_string(Fraction(9996, 10), 3) == "1000"

    def test_negative(self):
        assert to_decimal_string(Fraction(-1, 8), 3) == "-0.125"

    def test_needs_positive_digits(self):
        with pytest.raises(ValueError):
            to_decimal_string(Fraction(1), 0)
