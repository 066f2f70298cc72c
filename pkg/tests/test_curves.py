from decimal import Decimal

import pytest
from mpmath import mp

from output_formatter import matching_digits
from perturb import harmonic_estimate, oscillation_onset
from potentials import IntegerFamily
from reference_data import lookup
from spectra_runner import run_fig2_model


def _curve(m, n, N_max):
    result = run_fig2_model(m, n, "2", N_max, 0, 256)
    summary = result["summary"]
    assert summary["error"] is None
    assert [r[0] for r in result["rows"]] == [str(k) for k in range(N_max + 1)]
    return summary, [Decimal(r[1]) for r in result["rows"]]


def test_exact_model_curve_falls_below_the_reference_precision():
    summary, errors = _curve(1, 1, 30)
    assert matching_digits(summary["reference"], lookup(1, 1, "2").E) == 20
    assert Decimal(summary["best_log10_rel_err"]) <= -14
    assert errors[-1] < errors[0]


@pytest.mark.slow
def test_curve_of_the_three_one_model_reaches_four_digits():
    summary, errors = _curve(3, 1, 40)
    assert Decimal(summary["best_log10_rel_err"]) <= -4
    assert errors[summary["best_order"]] < errors[0]


@pytest.mark.slow
def test_curve_of_the_one_three_model_oscillates():
    summary, errors = _curve(1, 3, 40)
    assert summary["oscillates"] is True
    assert summary["oscillation_onset"] is not None
    assert errors[summary["best_order"]] < errors[0]


@pytest.mark.slow
def test_curve_of_the_three_three_model_does_not_oscillate():
    summary, errors = _curve(3, 3, 40)
    assert summary["oscillates"] is False
    assert Decimal(summary["best_log10_rel_err"]) <= -4


def test_harmonic_estimate_improves_with_coupling():
    errors = {}
    for R in ("10", "20"):
        reference = mp.mpf(lookup(1, 3, R).E)
        estimate = harmonic_estimate(IntegerFamily(1, 3, R)).value
        errors[R] = abs(estimate - reference)
        assert errors[R] <= mp.mpf("1e-3") * abs(reference)
    assert errors["20"] < errors["10"]


def _paired(values):
    """Even partial sums with every odd order repeating its predecessor"""
    return [mp.mpf(value) for value in values for _ in range(2)]


def test_single_even_bump_is_not_an_oscillation():
    errors = _paired(["1e-1", "1e-2", "1e-3", "2e-3", "1e-4", "1e-5", "1e-6"])
    assert oscillation_onset(errors) is None


def test_two_successive_even_rises_mark_the_onset():
    errors = _paired(["1e-1", "1e-2", "1e-3", "2e-3", "5e-3", "1e-2"])
    assert oscillation_onset(errors) == 6


def test_rises_below_the_floor_are_ignored():
    errors = _paired(["1e-1", "1e-12", "2e-12", "5e-12", "1e-11"])
    assert oscillation_onset(errors, mp.mpf("1e-10")) is None
    assert oscillation_onset(errors) == 4
