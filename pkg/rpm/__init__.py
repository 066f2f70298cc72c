# Riccati–Padé quantization: coefficients, Hankel determinants, solvers and ladders

from .types import HankelSystem, LadderReport, Parity, RiccatiCoefficients, RpmSolution, Sigma, Variant
from .riccati import (
    regularized_coeffs,
    regularized_residual,
    residual_certificate,
    riccati_coeffs,
    riccati_coeffs_from_series,
)
from .hankel import coefficient_index, hankel_det, hankel_matrix
from .solver import (
    coefficient_weights,
    regularized_roots,
    regularized_seed,
    search_radius,
    select_regularized_root,
    solve_general,
    solve_regularized,
)
from .ladder import (
    converge,
    converge_general,
    converge_regularized,
    ladder_precision,
    scan_regularized,
    solve_with_escalation,
    track_general,
)

__all__ = [
    'HankelSystem',
    'LadderReport',
    'Parity',
    'RiccatiCoefficients',
    'RpmSolution',
    'Sigma',
    'Variant',
    'regularized_coeffs',
    'regularized_residual',
    'residual_certificate',
    'riccati_coeffs',
    'riccati_coeffs_from_series',
    'coefficient_index',
    'hankel_det',
    'hankel_matrix',
    'coefficient_weights',
    'regularized_roots',
    'regularized_seed',
    'search_radius',
    'select_regularized_root',
    'solve_general',
    'solve_regularized',
    'converge',
    'converge_general',
    'converge_regularized',
    'ladder_precision',
    'scan_regularized',
    'solve_with_escalation',
    'track_general',
]
