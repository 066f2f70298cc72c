import pytest
from mpmath import mp, mpc, mpf

from numerics import TruncatedSeries
from rpm import (
    HankelSystem,
    Parity,
    RiccatiCoefficients,
    Sigma,
    Variant,
    coefficient_weights,
    hankel_det,
    regularized_coeffs,
    riccati_coeffs_from_series,
)
from spectral_errors import InsufficientCoefficientsError, InvalidInputError


def _listed(values):
    return RiccatiCoefficients(center=mpc(0), E=mpc(0), coeffs=tuple(mpc(v) for v in values))


def _close(value, expected):
    return abs(value - expected) <= mp.mpf(2) ** -240 * max(abs(expected), 1)


def test_plain_two_by_two_by_hand():
    rc = _listed([0, 1, 2, 3, 4, 5])
    assert _close(hankel_det(rc, 2, 0, Parity.PLAIN), 3 * 5 - 4 * 4)


def test_even_and_odd_subsequences():
    rc = _listed(range(10))
    # even: f2 f4 / f4 f6, odd: f3 f5 / f5 f7
    assert _close(hankel_det(rc, 2, 0, Parity.EVEN), 2 * 6 - 4 * 4)
    assert _close(hankel_det(rc, 2, 0, Parity.ODD), 3 * 7 - 5 * 5)


@pytest.mark.parametrize("D", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [0, 1, 2])
def test_harmonic_oscillator_zeroes_every_determinant(D, d):
    V = TruncatedSeries.from_coefficients([0, 0, 1] + [0] * 40)
    rc = riccati_coeffs_from_series(V, 1, 0, HankelSystem(D, d).required_coefficients)
    assert hankel_det(rc, D, d, Parity.EVEN) == 0
    assert hankel_det(rc, D, d, Parity.ODD) == 0
    sigma = Sigma(5).value
    regular = regularized_coeffs(1, sigma, 2 * sigma + 1, HankelSystem(D, d, Variant.REGULARIZED).required_coefficients)
    assert abs(hankel_det(regular, D, d, Parity.PLAIN)) < mp.mpf(10) ** -60


@pytest.mark.parametrize("D", [2, 3, 4])
def test_uniform_rescale_multiplies_by_power(D, rng):
    rc = _listed([mpc(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(4 * D + 2)])
    c = mpc("1.5", "-0.5")
    for parity in (Parity.EVEN, Parity.ODD, Parity.PLAIN):
        plain = hankel_det(rc, D, 0, parity)
        scaled = hankel_det(rc, D, 0, parity, weights=[c] * len(rc.coeffs))
        assert abs(scaled - c ** D * plain) <= mp.mpf(10) ** -60 * max(abs(plain), 1)


def test_geometric_weights_keep_zero_locus():
    sigma = Sigma(16).value
    exact = regularized_coeffs(1, sigma, 2 * sigma + 1, 8)
    perturbed = regularized_coeffs(1, sigma, 2 * sigma + mpf("1.01"), 8)
    weights = coefficient_weights(perturbed.coeffs)
    assert abs(hankel_det(exact, 3, 1, Parity.PLAIN, weights)) < mp.mpf(10) ** -50
    assert abs(hankel_det(perturbed, 3, 1, Parity.PLAIN, weights)) > mp.mpf(10) ** -50


def test_insufficient_coefficients_names_requirement():
    rc = _listed(range(6))
    with pytest.raises(InsufficientCoefficientsError) as info:
        hankel_det(rc, 2, 0, Parity.ODD)
    assert info.value.required == 7
    assert info.value.available == 5


def test_required_coefficients():
    assert HankelSystem(2, 0).required_coefficients == 7
    assert HankelSystem(3, 2, Variant.REGULARIZED).required_coefficients == 9
    with pytest.raises(InvalidInputError):
        HankelSystem(0)
    with pytest.raises(InvalidInputError):
        HankelSystem(2, -1)
