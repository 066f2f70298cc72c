"""
Energy partial sums, harmonic estimates and error curves against a reference
"""

from typing import List, Optional, Sequence, Tuple

from mpmath import mp, mpc, mpf

from logging_config import get_logger
from spectral_errors import InvalidInputError
from numerics.precision import half_precision_tolerance
from potentials import Potential, admissible_minimum
from .rayleigh_schrodinger import rs_coefficients
from .scaling import scale
from .types import (
    EnergyEstimate,
    ErrorCurve,
    ErrorCurveRow,
    PerturbationSeries,
    ScaledProblem,
)

logger = get_logger("perturb.curves")


def _terms(sp: ScaledProblem, series: PerturbationSeries, N: int) -> List[mpc]:
    root = mp.sqrt(sp.V2)
    return [root * series.coeffs[j] * sp.b ** j for j in range(N + 1)]


def energy_partial_sum(sp: ScaledProblem, series: PerturbationSeries, N: int) -> EnergyEstimate:
    """E^[N] = V0 + √V2·Σ_{j≤N} ε_j b^j; the error bar is the last non-negligible term"""
    if N > series.order:
        raise InvalidInputError(f"order {N} exceeds the series length {series.order}",
                                {"N": N, "available": series.order})
    terms = _terms(sp, series, N)
    value = sp.V0 + sum(terms, mpc(0))
    largest = max(abs(t) for t in terms)
    significant = [abs(t) for t in terms[1:] if abs(t) > half_precision_tolerance() * largest]
    return EnergyEstimate(value=value, order=N, error_bar=significant[-1] if significant else None)


def harmonic_estimate(p: Potential, v: int = 0) -> EnergyEstimate:
    """V0 + (2v+1)·√V2 at the admissible minimum"""
    sp = scale(p, admissible_minimum(p), 1)
    return EnergyEstimate(value=sp.V0 + (2 * v + 1) * mp.sqrt(sp.V2), order="harmonic")


def perturbative_series(p: Potential, v: int, N: int) -> Tuple[ScaledProblem, PerturbationSeries]:
    sp = scale(p, admissible_minimum(p), max(N, 1))
    return sp, rs_coefficients(sp, v, N)


def best_estimate(sp: ScaledProblem, series: PerturbationSeries) -> EnergyEstimate:
    """Partial sum truncated at the smallest non-negligible term"""
    terms = _terms(sp, series, series.order)
    largest = max(abs(t) for t in terms)
    candidates = [j for j in range(1, len(terms)) if abs(terms[j]) > half_precision_tolerance() * largest]
    if not candidates:
        return energy_partial_sum(sp, series, 0)
    best = min(candidates, key=lambda j: abs(terms[j]))
    return EnergyEstimate(value=sp.V0 + sum(terms[:best + 1], mpc(0)), order=best, error_bar=abs(terms[best]))


def relative_errors(values: Sequence[mpc], reference: mpc) -> List[mpf]:
    return [abs(value - reference) / abs(reference) for value in values]


def oscillation_onset(errors: Sequence[mpf], floor: mpf = mpf(0)) -> Optional[int]:
    """First N at which the error exceeds its value two orders earlier, at N and again at N+2

    Odd orders may repeat the even partial sums. Rises whose larger value
    lies below ``floor`` are ignored.
    """
    slack = 1 + mpf(2) ** (-(mp.prec // 4))

    def rises(N: int) -> bool:
        return errors[N] > floor and errors[N] > errors[N - 2] * slack

    for N in range(2, len(errors) - 2):
        if rises(N) and rises(N + 2):
            return N
    return None


def error_curve(p: Potential, v: int, N_max: int, reference: EnergyEstimate) -> ErrorCurve:
    """log10 |(E^[N] − E_ref)/E_ref| for N = 0..N_max

    The noise floor is the reference's relative error bar (or half the working
    precision when it carries none).
    """
    if reference.value == 0:
        raise InvalidInputError("the reference energy must be nonzero")
    sp, series = perturbative_series(p, v, N_max)
    partial = [sp.V0 + sum(_terms(sp, series, N), mpc(0)) for N in range(N_max + 1)]
    errors = relative_errors(partial, reference.value)

    floor = half_precision_tolerance()
    if reference.error_bar is not None:
        floor = max(floor, reference.error_bar / abs(reference.value))
    smallest = mpf(2) ** (-mp.prec)
    rows = tuple(ErrorCurveRow(n=N, log10_rel_err=mp.log10(max(e, smallest))) for N, e in enumerate(errors))
    best_order = min(range(len(errors)), key=lambda N: errors[N])
    onset = oscillation_onset(errors, floor)
    logger.info(f"{p.label} v={v}: best order {best_order}, "
                f"log10 error {mp.nstr(rows[best_order].log10_rel_err, 5)}, onset {onset}")
    return ErrorCurve(
        rows=rows,
        floor=floor,
        best_order=best_order,
        best_log_error=rows[best_order].log10_rel_err,
        oscillation_onset=onset,
    )
