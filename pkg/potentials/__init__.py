# Potential families, stationary points and Taylor expansions

from .types import (
    AlphaBeta,
    FamilyKind,
    IntegerFamily,
    Potential,
    PowerTerm,
    ShiftedLine,
    ShiftedSextic,
    StationaryPoint,
)
from .families import (
    alpha_beta_closed_forms,
    alpha_roots,
    beta_roots,
    derivative_residual,
    eval_potential,
    generalized_binomials,
    taylor_coeffs,
)
from .stationary import admissible_minimum, classify, stationary_points
from .profile import ProfileRow, shifted_profile, vertical_shift

__all__ = [
    'AlphaBeta',
    'FamilyKind',
    'IntegerFamily',
    'Potential',
    'PowerTerm',
    'ShiftedLine',
    'ShiftedSextic',
    'StationaryPoint',
    'alpha_beta_closed_forms',
    'alpha_roots',
    'beta_roots',
    'derivative_residual',
    'eval_potential',
    'generalized_binomials',
    'taylor_coeffs',
    'admissible_minimum',
    'classify',
    'stationary_points',
    'ProfileRow',
    'shifted_profile',
    'vertical_shift',
]
