from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrinv.series import (
    CompositionError,
    NotInvertibleError,
    PrecisionError,
    Series,
    add,
    coeff,
    compose,
    derivative,
    format_coeffs,
    mul,
    mul_by_x,
    parse_coeffs,
    pow,
    recip,
    scale,
)

from conftest import series, small_rationals

F = Fraction


def S(*cs, precision=None):
    return Series(cs, precision)


def schoolbook(a, b):
    # accumulate every pair of terms, then cut at the shared precision
    n = min(a.precision, b.precision)
    out = [F(0)] * (a.precision + b.precision + 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return out[: n + 1]


class TestConstruction:
    def test_pads_to_precision(self):
        s = Series([1, 2], 4)
        assert s.precision == 4
        assert s.coeffs == (1, 2, 0, 0, 0)

    def test_truncates_to_precision(self):
        assert Series([1, 2, 3], 1).coeffs == (1, 2)

    def test_negative_precision_rejected(self):
        with pytest.raises(ValueError):
            Series([1], -1)

    def test_empty_without_precision(self):
        with pytest.raises(ValueError):
            Series([])

    def test_agrees_with(self):
        assert Series([1, 2, 3]).agrees_with(Series([1, 2]))
        assert not Series([1, 2, 3]).agrees_with(Series([1, 5]))
        assert Series([1, 2, 3]) != Series([1, 2])

    def test_text_round_trip(self):
        s = S(0, F(3, 2), -1, 7)
        assert format_coeffs(s) == "[0, 3/2, -1, 7]"
        assert parse_coeffs(format_coeffs(s)) == s


class TestCoeff:
    def test_direct_read(self):
        assert coeff(S(1, 2, 3), 1) == 2

    def test_zero_series(self):
        assert coeff(Series.zero(5), 3) == 0

    def test_binomial(self):
        assert coeff(pow(Series([1, 0, 1], 10), 5), 4) == 10

    def test_beyond_precision_is_error(self):
        with pytest.raises(PrecisionError):
            coeff(Series.zero(3), 4)

    @given(series(), series(), small_rationals, small_rationals, st.integers(0, 8))
    def test_linearity(self, f, g, a, b, n):
        n = min(n, f.precision, g.precision)
        combo = add(scale(f, a), scale(g, b))
        assert coeff(combo, n) == a * coeff(f, n) + b * coeff(g, n)


class TestAdd:
    def test_cancellation(self):
        r = add(S(1, 1, 0, 0), S(1, -1))
        assert r == S(2, 0)

    def test_identity(self):
        s = S(1, F(2, 3), 5)
        assert add(s, Series.zero(2)) == s

    def test_fractions(self):
        assert add(S(0, F(1, 2)), S(0, F(1, 3))) == S(0, F(5, 6))


class TestMul:
    def test_difference_of_squares(self):
        assert mul(Series([1, 1], 4), Series([1, -1], 4)) == S(1, 0, -1, 0, 0)

    def test_binomial_square(self):
        assert mul(S(1, 0, 1, 0, 0), S(1, 0, 1, 0, 0)) == S(1, 0, 2, 0, 1)

    def test_shift(self):
        assert mul(Series([0, 1], 3), Series([1, 1, 1], 3)) == S(0, 1, 1, 1)

    @given(series(), series())
    def test_matches_schoolbook(self, a, b):
        assert list(mul(a, b).coeffs) == schoolbook(a, b)

    @given(series(), series())
    def test_commutative(self, a, b):
        assert mul(a, b) == mul(b, a)


class TestDerivative:
    def test_power_rule(self):
        assert derivative(S(1, 2, 3)) == S(2, 6)

    def test_constant(self):
        d = derivative(Series([7], 4))
        assert d == Series.zero(3)

    def test_monomial(self):
        assert derivative(Series.monomial(5, 5)) == S(0, 0, 0, 0, 5)

    def test_precision_zero_is_error(self):
        with pytest.raises(PrecisionError):
            derivative(S(1))

    @given(series(min_precision=1), series(min_precision=1))
    def test_product_rule(self, f, g):
        lhs = derivative(mul(f, g))
        rhs = add(mul(derivative(f), g), mul(f, derivative(g)))
        assert lhs.precision == min(f.precision, g.precision) - 1
        assert lhs == rhs

    @given(series(min_precision=1, max_precision=6), st.integers(1, 8))
    def test_power_identity(self, phi, m):
        lhs = derivative(pow(phi, m))
        rhs = scale(mul(derivative(phi), pow(phi, m - 1)), m)
        assert lhs == rhs


class TestPow:
    def test_binomial(self):
        assert pow(Series([1, 1], 5), 3) == S(1, 3, 3, 1, 0, 0)

    def test_zeroth_power(self):
        assert pow(S(3, 4, 5), 0) == S(1, 0, 0)

    def test_binary_matches_repeated(self):
        s = Series([1, 0, 1], 8)
        repeated = Series.one(8)
        for _ in range(6):
            repeated = mul(repeated, s)
        assert pow(s, 6) == repeated
        assert coeff(pow(s, 6), 4) == 15

    @given(series(max_precision=6), st.integers(0, 9))
    def test_matches_repeated_mul(self, s, m):
        expected = Series.one(s.precision)
        for _ in range(m):
            expected = mul(expected, s)
        assert pow(s, m) == expected


class TestRecip:
    def test_geometric(self):
        assert recip(Series([1, -1], 4)) == S(1, 1, 1, 1, 1)

    def test_constant(self):
        assert recip(S(2)) == S(F(1, 2))

    def test_zero_constant_term(self):
        with pytest.raises(NotInvertibleError):
            recip(S(0, 1, 1))

    @given(series().filter(lambda s: s.coeffs[0] != 0))
    def test_round_trip(self, s):
        assert mul(s, recip(s)) == Series.one(s.precision)


class TestCompose:
    def test_squaring(self):
        assert compose(Series.monomial(2, 4), Series([0, 1, 1], 4)) == S(0, 0, 1, 2, 1)

    def test_at_zero(self):
        h = S(F(2, 3), 5, -1, 4)
        assert compose(h, Series.zero(3)) == S(F(2, 3), 0, 0, 0)

    def test_geometric_substitution(self):
        geometric = recip(Series([1, -1], 6))
        assert compose(geometric, Series.monomial(2, 6)) == S(1, 0, 1, 0, 1, 0, 1)

    def test_nonzero_constant_inner(self):
        with pytest.raises(CompositionError):
            compose(S(1, 1), S(1, 1))

    def test_precision_is_min(self):
        assert compose(S(1, 1, 1, 1, 1), S(0, 1)).precision == 1

    @settings(max_examples=60)
    @given(series(max_precision=6), series(max_precision=6, const=0), series(max_precision=6, const=0))
    def test_associative(self, f, g, h):
        assert compose(compose(f, g), h) == compose(f, compose(g, h))

    @given(series(), series(), series(const=0))
    def test_is_ring_homomorphism(self, f, g, inner):
        assert compose(mul(f, g), inner) == mul(compose(f, inner), compose(g, inner))
        assert compose(add(f, g), inner) == add(compose(f, inner), compose(g, inner))


class TestMulByX:
    def test_shift(self):
        assert mul_by_x(S(1, 1)) == S(0, 1, 1)

    def test_zero(self):
        assert mul_by_x(Series.zero(2)) == Series.zero(3)

    def test_constant(self):
        assert mul_by_x(S(F(5, 2))) == S(0, F(5, 2))


def test_operators_match_functions():
    a, b = S(1, 2, 3), S(F(1, 2), 0, -1)
    assert a + b == add(a, b)
    assert a * b == mul(a, b)
    assert a - a == Series.zero(2)
    assert a ** 3 == pow(a, 3)
    assert 2 * a == scale(a, 2)
    assert a(S(0, 1, 1)) == compose(a, S(0, 1, 1))
