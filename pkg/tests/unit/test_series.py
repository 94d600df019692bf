"""
Unit Tests for Exact Scalars and Truncated Series
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moments.exceptions import SeriesDomainError, TruncationError
from moments.models.polynomial import horner, poly_add, poly_mul
from moments.models.scalar import all_exact, conj, format_exact, is_exact, parse_scalar, to_exact
from moments.models.series import TruncatedSeries
from moments.services.series_service import series_exp, series_inverse, series_log, series_mul

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7)


def series_of(order, coefficient_strategy=rationals, constant=None):
    """Strategy for series of the given order, optionally with a fixed constant term."""
    head = st.just([Fraction(constant)]) if constant is not None else st.lists(coefficient_strategy, min_size=1, max_size=1)
    tail = st.lists(coefficient_strategy, min_size=order, max_size=order)
    return st.builds(lambda h, t: TruncatedSeries(order, tuple(h + t)), head, tail)


@pytest.mark.unit
class TestExactScalar:
    """Parsing and formatting of exact rationals."""

    def test_lowest_terms_and_sign(self):
        # Arrange & Act
        value = to_exact("-6/4")

        # Assert
        assert value == Fraction(-3, 2)
        assert format_exact(value) == "-3/2"

    def test_integer_formats_without_denominator(self):
        assert format_exact(Fraction(4, 2)) == "2"

    def test_floats_are_not_silently_exact(self):
        with pytest.raises(TypeError):
            to_exact(0.1)

    def test_parse_scalar_keeps_floats_floating(self):
        assert isinstance(parse_scalar(0.25), float)
        assert parse_scalar("1/4") == Fraction(1, 4)
        assert parse_scalar("0.25") == Fraction(1, 4)

    def test_division_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1) / Fraction(0)

    def test_exactness_checks(self):
        assert is_exact(3) and is_exact(Fraction(1, 3))
        assert not is_exact(True)
        assert all_exact([1, Fraction(1, 2)])
        assert not all_exact([1, 0.5])

    def test_conjugate_is_identity_on_reals(self):
        assert conj(Fraction(2, 3)) == Fraction(2, 3)
        assert conj(1 + 2j) == 1 - 2j


@pytest.mark.unit
class TestPolynomialHelpers:
    """Coefficient vectors, constant term first."""

    def test_product_length_and_empty_factor(self):
        assert poly_mul([1, 1], [1, -1]) == [1, 0, -1]
        assert poly_mul([], [1, 2]) == []

    def test_sum_pads_shorter_vector(self):
        assert poly_add([1], [0, 2, 3]) == [1, 2, 3]

    def test_horner_stays_exact(self):
        # Arrange
        coeffs = [Fraction(1, 2), 0, 1]

        # Act
        value = horner(coeffs, Fraction(1, 3))

        # Assert
        assert value == Fraction(11, 18)
        assert isinstance(value, Fraction)


@pytest.mark.unit
class TestTruncatedSeries:
    """Construction and elementwise operations."""

    def test_from_coeffs_pads_to_order(self):
        series = TruncatedSeries.from_coeffs([1, "1/2"], order=3)

        assert series.coeffs == (1, Fraction(1, 2), 0, 0)

    def test_from_coeffs_rejects_dropped_terms(self):
        with pytest.raises(TruncationError):
            TruncatedSeries.from_coeffs([1, 2, 3], order=1)

    def test_coefficient_count_must_match_order(self):
        with pytest.raises(TruncationError):
            TruncatedSeries(2, (Fraction(1),))

    def test_addition_requires_equal_orders(self):
        with pytest.raises(TruncationError):
            TruncatedSeries.constant(1, 2) + TruncatedSeries.constant(1, 3)

    def test_evaluate_geometric_polynomial(self):
        series = TruncatedSeries.from_coeffs([1, 1, 1])

        assert series.evaluate(2) == 7

    def test_antiderivative_raises_order_and_keeps_every_term(self):
        # Arrange
        series = TruncatedSeries.from_coeffs([1, 2, 3])

        # Act
        integral = series.antiderivative()

        # Assert
        assert integral.order == 3
        assert integral.coeffs == (0, 1, 1, 1)

    def test_antiderivative_inverts_derivative(self):
        series = TruncatedSeries.from_coeffs([0, "1/2", -3, 4])

        integral = TruncatedSeries(2, tuple(series.derivative())).antiderivative()

        assert integral == series

    def test_shift_multiplies_by_lambda_and_truncates(self):
        series = TruncatedSeries.from_coeffs([1, 2, 3])

        assert series.shift().coeffs == (0, 1, 2)

    def test_shift_of_order_zero_is_zero(self):
        assert TruncatedSeries.constant(5, 0).shift() == TruncatedSeries.constant(0, 0)


@pytest.mark.unit
class TestSeriesArithmetic:
    """series_mul, series_inverse, series_exp and series_log."""

    def test_binomial_square(self):
        # Arrange
        a = TruncatedSeries.from_coeffs([1, 1], order=2)

        # Act
        result = series_mul(a, a)

        # Assert
        assert result.coeffs == (1, 2, 1)

    def test_geometric_series_times_one_minus_lambda(self):
        geometric = TruncatedSeries.from_coeffs([1] * 6)
        factor = TruncatedSeries.from_coeffs([1, -1], order=5)

        assert series_mul(geometric, factor) == TruncatedSeries.constant(1, 5)

    def test_multiplication_order_mismatch(self):
        with pytest.raises(TruncationError):
            series_mul(TruncatedSeries.constant(1, 2), TruncatedSeries.constant(1, 3))

    def test_exp_of_lambda(self):
        result = series_exp(TruncatedSeries.variable(3))

        assert result.coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6))

    def test_exp_of_zero_is_one(self):
        assert series_exp(TruncatedSeries.constant(0, 4)) == TruncatedSeries.constant(1, 4)

    def test_exp_rejects_constant_term(self):
        with pytest.raises(SeriesDomainError):
            series_exp(TruncatedSeries.constant(1, 3))

    def test_mercator_series(self):
        result = series_log(TruncatedSeries.from_coeffs([1, 1], order=4))

        assert result.coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4))

    def test_log_of_one_is_zero(self):
        assert series_log(TruncatedSeries.constant(1, 3)) == TruncatedSeries.constant(0, 3)

    def test_log_rejects_constant_other_than_one(self):
        with pytest.raises(SeriesDomainError):
            series_log(TruncatedSeries.constant(2, 3))

    def test_exp_log_round_trip_on_one_plus_lambda(self):
        one_plus = TruncatedSeries.from_coeffs([1, 1], order=6)

        assert series_exp(series_log(one_plus)) == one_plus

    def test_log_exp_round_trip(self):
        a = TruncatedSeries.from_coeffs([0, 1, -1], order=5)

        assert series_log(series_exp(a)) == a

    def test_inverse_of_one_minus_lambda(self):
        result = series_inverse(TruncatedSeries.from_coeffs([1, -1], order=4))

        assert result.coeffs == (1, 1, 1, 1, 1)

    def test_inverse_needs_unit_constant(self):
        with pytest.raises(SeriesDomainError):
            series_inverse(TruncatedSeries.variable(3))


@pytest.mark.unit
class TestSeriesProperties:
    """Exact algebraic laws over random rational coefficients."""

    @given(st.integers(min_value=0, max_value=6).flatmap(lambda n: st.tuples(series_of(n), series_of(n))))
    def test_multiplication_commutes(self, pair):
        a, b = pair
        assert series_mul(a, b) == series_mul(b, a)

    @given(st.integers(min_value=0, max_value=5).flatmap(
        lambda n: st.tuples(series_of(n), series_of(n), series_of(n))
    ))
    def test_multiplication_associates(self, triple):
        a, b, c = triple
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))

    @given(st.integers(min_value=0, max_value=16).flatmap(lambda n: series_of(n, constant=0)))
    def test_log_inverts_exp(self, a):
        assert series_log(series_exp(a)) == a

    @given(st.integers(min_value=0, max_value=16).flatmap(lambda n: series_of(n, constant=1)))
    def test_exp_inverts_log(self, b):
        assert series_exp(series_log(b)) == b

    @given(st.integers(min_value=0, max_value=8).flatmap(
        lambda n: series_of(n, st.fractions(min_value=-2, max_value=2, max_denominator=5), constant=1)
    ))
    def test_inverse_is_multiplicative_inverse(self, a):
        assert series_mul(a, series_inverse(a)) == TruncatedSeries.constant(1, a.order)

    @given(st.integers(min_value=0, max_value=16).flatmap(lambda n: series_of(n)))
    def test_shift_matches_product_with_lambda(self, a):
        assert a.shift() == series_mul(TruncatedSeries.variable(a.order), a)
