import pytest
from mpmath import mp, mpc

from numerics import TruncatedSeries, series_derivative, series_mul
from spectral_errors import InvalidInputError, SeriesMismatchError


def test_product_of_geometric_series_gives_counting_coefficients():
    geometric = TruncatedSeries.from_coefficients([1] * 8)
    square = geometric * geometric
    assert square.order == 7
    assert [int(c.real) for c in square.coeffs] == list(range(1, 9))


def test_product_truncates_at_the_shorter_order():
    a = TruncatedSeries.from_coefficients([1, 2, 3, 4, 5])
    b = TruncatedSeries.from_coefficients([1, 1])
    assert (a * b).order == 1
    assert (a * b).coeffs == (mpc(1), mpc(3))


def test_mismatched_centres_are_rejected():
    a = TruncatedSeries.from_coefficients([1, 2], center=0)
    b = TruncatedSeries.from_coefficients([1, 2], center=mpc(0, -1))
    with pytest.raises(SeriesMismatchError):
        series_mul(a, b)
    with pytest.raises(SeriesMismatchError):
        a + b


def test_derivative_and_its_order_zero_error():
    a = TruncatedSeries.from_coefficients([5, 1, 1, 1])
    assert series_derivative(a).coeffs == (mpc(1), mpc(2), mpc(3))
    with pytest.raises(InvalidInputError):
        series_derivative(TruncatedSeries.constant(2, 0))


def test_coefficient_beyond_order_is_an_error():
    a = TruncatedSeries.constant(1, 3)
    assert a.coefficient(3) == 0
    with pytest.raises(IndexError):
        a.coefficient(4)


def test_evaluate_matches_exponential_partial_sum():
    exp_series = TruncatedSeries.from_coefficients([1 / mp.factorial(j) for j in range(60)])
    assert abs(exp_series.evaluate(mp.mpf("0.5")) - mp.exp(mp.mpf("0.5"))) < mp.mpf(10) ** -70


def test_subtraction_cancels():
    a = TruncatedSeries.from_coefficients([1, mpc(2, 3), 4], center=mpc(0, -2))
    assert all(c == 0 for c in (a - a).coeffs)
