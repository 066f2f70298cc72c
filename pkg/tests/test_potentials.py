from dataclasses import dataclass

import pytest
from mpmath import mp, mpc, mpf

from potentials import (
    AlphaBeta,
    IntegerFamily,
    Potential,
    PowerTerm,
    ShiftedSextic,
    admissible_minimum,
    derivative_residual,
    eval_potential,
    stationary_points,
)
from spectral_errors import BranchCutError, ClassificationError, InvalidInputError, SingularityError


@dataclass(frozen=True)
class _TiltedWell(Potential):
    """x² − 1/x², whose stationary points sit on the diagonals"""

    def terms(self):
        return (PowerTerm(1, 1, 2), PowerTerm(-1, 1, -2))

    def stationary_locations(self):
        return tuple(mp.expjpi(mpf(2 * k + 1) / 4) for k in range(4))

    def parameters(self):
        return {}



def test_integer_family_value_at_minus_i():
    assert eval_potential(IntegerFamily(1, 1, 1), mpc(0, -1)) == -2


@pytest.mark.parametrize("R", ["1", "2", "20"])
def test_sextic_member_constant_term(R):
    R = mpf(R)
    value = eval_potential(IntegerFamily(1, 3, R), mpc(0, -R))
    assert abs(value + 4 * R ** 2 / 3) < mp.mpf(10) ** -60 * R ** 2


def test_alpha_beta_zero_reduces_to_sextic(rng):
    R = mpf("1.7")
    ab = AlphaBeta(0, 0, mp.sqrt(R ** 8 / 3))
    sextic = ShiftedSextic(mp.sqrt(R ** 8 / 3))
    member = IntegerFamily(1, 3, R)
    for _ in range(10):
        x = mpc(rng.uniform(-3, 3), rng.uniform(-3, -0.2))
        reference = eval_potential(member, x)
        assert abs(eval_potential(ab, x) - reference) < mp.mpf(10) ** -60 * abs(reference)
        assert abs(eval_potential(sextic, x) - reference) < mp.mpf(10) ** -60 * abs(reference)


def test_singularity_and_branch_cut():
    with pytest.raises(SingularityError):
        eval_potential(IntegerFamily(1, 1, 1), 0)
    with pytest.raises(BranchCutError):
        eval_potential(AlphaBeta("0.5", "0.25", 1), mpc(0, 2))
    # integer exponents have no cut
    eval_potential(AlphaBeta(1, 1, 1), mpc(0, 2))


@pytest.mark.parametrize("m, n", [(2, 1), (1, 2), (0, 1), (-1, 1)])
def test_even_or_non_positive_exponents_rejected(m, n):
    with pytest.raises(InvalidInputError):
        IntegerFamily(m, n, 1)


def test_negative_parameters_rejected():
    with pytest.raises(InvalidInputError):
        IntegerFamily(1, 1, -1)
    with pytest.raises(InvalidInputError):
        AlphaBeta(-1, 0, 1)
    with pytest.raises(InvalidInputError):
        ShiftedSextic(0)


def test_lambda_convention():
    R = mpf(2)
    assert IntegerFamily(1, 1, R).lam == R ** 4
    assert IntegerFamily(3, 1, R).lam == 3 * R ** 8
    assert IntegerFamily(1, 3, R).lam == R ** 8 / 3


@pytest.mark.parametrize("m, n", [(1, 1), (1, 3), (3, 1), (3, 3)])
def test_integer_family_roots_form_a_regular_polygon(m, n):
    R = mpf("1.5")
    points = stationary_points(IntegerFamily(m, n, R))
    assert len(points) == 2 * (m + n)
    for k, point in enumerate(points):
        assert abs(abs(point.location) - R) < mp.mpf(10) ** -70
        expected_angle = mp.pi * k / (m + n)
        assert abs(mp.expj(expected_angle) - point.location / R) < mp.mpf(10) ** -70


@pytest.mark.parametrize("p", [
    IntegerFamily(1, 1, 2), IntegerFamily(1, 3, "1.5"), IntegerFamily(3, 1, 5), IntegerFamily(3, 3, 1),
    AlphaBeta(0, 0, 7), AlphaBeta(1, 1, 3), AlphaBeta("0.5", "0.25", 10), ShiftedSextic(100),
])
def test_stationary_residuals(p):
    for point in stationary_points(p):
        scale = abs(point.second_derivative * point.location)
        assert derivative_residual(p, point.location) <= mp.mpf(2) ** (-mp.prec + 20) * scale


def test_sextic_has_eight_roots_with_equal_curvature_and_one_admissible():
    g = mpf(100) ** 4 / mp.sqrt(3)
    points = stationary_points(ShiftedSextic(g))
    assert len(points) == 8
    for point in points:
        assert abs(point.second_derivative - 16) < mp.mpf(10) ** -60
    assert sum(point.admissible for point in points) == 1
    minimum = admissible_minimum(ShiftedSextic(g))
    assert abs(minimum.location - mpc(0, -100)) < mp.mpf(10) ** -60


@pytest.mark.parametrize("m, n, curvature", [(1, 3, lambda R: 16), (3, 1, lambda R: 48 * R ** 4),
                                             (1, 1, lambda R: 8), (3, 3, lambda R: 72 * R ** 4)])
def test_admissible_minimum_of_integer_family(m, n, curvature):
    R = mpf("2.5")
    point = admissible_minimum(IntegerFamily(m, n, R))
    assert abs(point.location - mpc(0, -R)) < mp.mpf(10) ** -70
    expected = curvature(R)
    assert abs(point.second_derivative - expected) < mp.mpf(10) ** -60 * expected


def test_alpha_beta_minimum_at_minus_i_t():
    R = mpf(3)
    p = AlphaBeta(0, 0, mp.sqrt(R ** 8 / 3))
    assert abs(p.T - R) < mp.mpf(10) ** -70
    fractional = AlphaBeta("0.5", "0.25", 10)
    point = admissible_minimum(fractional)
    T = fractional.T
    assert abs(point.location - mpc(0, -T)) < mp.mpf(10) ** -60 * T
    expected = (2 + fractional.alpha) * T ** fractional.alpha * (8 + fractional.alpha + fractional.beta)
    assert abs(point.second_derivative - expected) < mp.mpf(10) ** -60 * expected


def test_fractional_alpha_beta_keeps_roots_off_the_cut():
    p = AlphaBeta("0.5", "0.25", 10)
    for point in stationary_points(p):
        y = mpc(0, 1) * point.location
        assert abs(mp.arg(y)) < mp.pi


def test_missing_admissible_point_names_condition():
    with pytest.raises(ClassificationError) as info:
        admissible_minimum(_TiltedWell())
    assert info.value.condition == "x0 on the negative imaginary axis"
