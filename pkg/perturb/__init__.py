# Harmonic scaling and Rayleigh–Schrödinger series about the admissible minimum

from .types import EnergyEstimate, ErrorCurve, ErrorCurveRow, PerturbationSeries, ScaledProblem
from .scaling import scale
from .rayleigh_schrodinger import apply_position, rs_coefficients
from .curves import (
    best_estimate,
    energy_partial_sum,
    error_curve,
    harmonic_estimate,
    oscillation_onset,
    perturbative_series,
    relative_errors,
)

__all__ = [
    'EnergyEstimate',
    'ErrorCurve',
    'ErrorCurveRow',
    'PerturbationSeries',
    'ScaledProblem',
    'scale',
    'apply_position',
    'rs_coefficients',
    'best_estimate',
    'energy_partial_sum',
    'error_curve',
    'harmonic_estimate',
    'oscillation_onset',
    'perturbative_series',
    'relative_errors',
]
