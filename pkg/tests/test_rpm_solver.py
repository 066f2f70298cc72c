import pytest
from mpmath import mp, mpc, mpf

from potentials import IntegerFamily
from rpm import (
    HankelSystem,
    Parity,
    RpmSolution,
    Sigma,
    Variant,
    converge,
    converge_regularized,
    hankel_det,
    ladder_precision,
    regularized_coeffs,
    regularized_roots,
    regularized_seed,
    scan_regularized,
    search_radius,
    select_regularized_root,
    solve_general,
    solve_regularized,
)
from spectral_errors import ConvergenceError, InvalidInputError, PrecisionLimitedError


def _exact(R):
    R = mpf(R)
    return 2 - mp.sqrt(4 * R ** 4 + 1)


@pytest.mark.parametrize("R", ["20", "10", "5", "2", "1.5", "1"])
def test_regularized_two_by_two_reaches_twenty_digits(R):
    solution = solve_regularized(1, mpf(R) ** 4, D=2, d=0)
    exact = _exact(R)
    assert abs(solution.E - exact) <= mp.mpf(10) ** -20 * abs(exact)
    assert solution.variant is Variant.REGULARIZED
    assert solution.D == 2


def test_regularized_seed_is_the_harmonic_estimate():
    R = mpf(2)
    assert abs(regularized_seed(1, R ** 4) - (2 - 2 * R ** 2)) < mp.mpf(10) ** -60


def test_general_variant_at_the_imaginary_minimum():
    R = mpf(2)
    p = IntegerFamily(1, 1, R)
    solution = solve_general(p, D=2, d=0, x0=mpc(0, -R), guess_E=-6, guess_f0=mpc(0, "-0.2"))
    exact = _exact(R)
    assert abs(solution.E - exact) <= mp.mpf(10) ** -20 * abs(exact)
    sigma = (1 - mp.sqrt(4 * R ** 4 + 1)) / 2
    assert abs(solution.f0 - mpc(0, -1) * (R + sigma / R)) < mp.mpf(10) ** -20


def test_ladder_for_the_exact_model_converges():
    R = mpf(10)
    report = converge_regularized(1, R ** 4, D_min=2, D_max=5, digits=20)
    assert report.converged
    assert report.solutions[0].error_estimate is None
    assert report.solutions[-1].error_estimate is not None
    exact = _exact(R)
    for solution in report.solutions:
        assert abs(solution.E - exact) <= mp.mpf(10) ** -20 * abs(exact)
        assert abs(solution.E.imag) <= max(solution.error_estimate or 0, mp.mpf(10) ** -30)


def test_scan_finds_the_ground_level_near_its_seed():
    R = mpf(2)
    roots = scan_regularized(1, R ** 4, D=2, center=-6, radius=1, points=5)
    assert roots
    exact = _exact(R)
    assert any(abs(root.E - exact) <= mp.mpf(10) ** -20 * abs(exact) for root in roots)


def test_ladder_precision_policy():
    assert ladder_precision(2, 20, 256) == 256
    assert ladder_precision(2, 20, 64) == 133
    assert ladder_precision(15, 20, 256) <= 512
    assert ladder_precision(30, 20, 256) == 877


def _fake(E, D):
    return RpmSolution(E=mpc(E), D=D, d=0, residual_norm=mpf(0), variant=Variant.REGULARIZED,
                       precision=mp.prec)


def test_ladder_keeps_partial_results_and_records_failures():
    def solve_at(D, seed, advisory):
        if D == 3:
            raise ConvergenceError("no root", {"advice": "try another d"})
        return _fake(1 + mpf(10) ** -D, D)

    report = converge(solve_at, 2, 4, digits=30)
    assert [s.D for s in report.solutions] == [2, 4]
    assert {f["D"] for f in report.failures} == {3}
    assert {f["seed"] for f in report.failures} == {"previous", "original"}
    assert not report.converged
    assert abs(report.solutions[-1].error_estimate - (mpf(10) ** -2 - mpf(10) ** -4)) < mp.mpf(10) ** -40


def test_ladder_escalates_precision_on_rounding_domination():
    seen = []

    def solve_at(D, seed, advisory):
        seen.append((D, mp.prec, advisory))
        if len(seen) == 1:
            raise PrecisionLimitedError("rounding dominated", mp.prec)
        return _fake(2, D)

    report = converge(solve_at, 2, 3, digits=20, precision=256)
    assert seen[0] == (2, 256, False)
    assert seen[1] == (2, 512, False)
    assert report.solutions[-1].error_estimate == 0
    assert report.converged


def test_ladder_needs_two_rungs():
    with pytest.raises(InvalidInputError):
        converge(lambda D, seed, advisory: _fake(1, D), 3, 3)


@pytest.mark.parametrize("m", [1, 3])
def test_regularized_determinant_is_even_in_the_energy(m):
    sigma = Sigma(3).value
    K = HankelSystem(3, 0, Variant.REGULARIZED).required_coefficients
    E = mpf("1.7")
    left = hankel_det(regularized_coeffs(m, sigma, E, K), 3, 0, Parity.PLAIN)
    right = hankel_det(regularized_coeffs(m, sigma, -E, K), 3, 0, Parity.PLAIN)
    assert abs(left - right) <= mp.mpf(2) ** -200 * max(abs(left), 1)


def test_seed_on_the_symmetry_point_is_moved_off_it():
    # the determinant is even in E, so its derivative vanishes at E = 0
    solution = solve_regularized(1, 1, D=2, guess_E=0)
    exact = _exact(1)
    assert abs(solution.E - exact) <= mp.mpf(10) ** -20 * abs(exact)


def test_search_window_spans_four_level_spacings():
    for R in ("1", "2", "20"):
        assert abs(search_radius(1, mpf(R) ** 4) - 8) < mp.mpf(10) ** -50


def test_root_nearest_the_harmonic_estimate_is_not_always_the_level():
    lam = mpf("1.5") ** 4
    exact = _exact("1.5")
    nearest = solve_regularized(1, lam, D=2, guess_E=regularized_seed(1, lam))
    assert abs(nearest.E - exact) > mpf("0.05")
    selected = select_regularized_root(1, lam, D=2)
    assert abs(selected.E - exact) <= mp.mpf(10) ** -20 * abs(exact)


@pytest.mark.parametrize("R", ["1", "1.5"])
def test_selected_root_is_the_exact_level(R):
    lam = mpf(R) ** 4
    exact = _exact(R)
    roots = regularized_roots(1, lam, D=2)
    assert roots
    selected = select_regularized_root(1, lam, D=2)
    assert abs(selected.E - exact) <= mp.mpf(10) ** -20 * abs(exact)
    assert selected.D == 2


def test_solution_reports_residual_and_conditioning_separately():
    R = mpf(2)
    solution = solve_general(IntegerFamily(1, 1, R), D=2, d=0, x0=mpc(0, -R), guess_E=-6,
                             guess_f0=mpc(0, "-0.2"))
    assert solution.residual_norm < mp.mpf(10) ** -30
    assert solution.conditioning is not None
    assert solution.residual_norm < solution.conditioning <= 1


def test_ladder_stops_when_estimates_stop_improving():
    def solve_at(D, seed, advisory):
        return _fake(1 + (-1) ** D * mpf("0.1"), D)

    report = converge(solve_at, 2, 20, digits=20, patience=4)
    assert [s.D for s in report.solutions] == [2, 3, 4, 5, 6, 7]
    assert not report.converged


def test_failed_displacement_is_retried_one_higher(monkeypatch):
    import rpm.ladder as ladder

    calls = []

    def solve(m, lam, D, d, start, branch, v, advisory):
        calls.append((D, d))
        if d == 0:
            raise ConvergenceError("Newton diverged", {"advice": "change d"})
        return RpmSolution(E=mpc(2 + mpf(10) ** -(4 * D)), D=D, d=d, residual_norm=mpf(0),
                           variant=Variant.REGULARIZED)

    monkeypatch.setattr(ladder, "solve_regularized", solve)
    report = converge_regularized(1, 1, D_min=2, D_max=3, digits=5)
    assert [s.d for s in report.solutions] == [1, 1]
    assert calls == [(2, 0), (2, 1), (3, 0), (3, 1)]
    assert report.converged
