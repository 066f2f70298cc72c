# Multiprecision substrate: series, determinants, Newton

from .types import (
    BigComplex,
    BigReal,
    DEFAULT_PRECISION,
    MIN_PRECISION,
    DeterminantReport,
    NewtonResult,
    Pivoting,
    SquareMatrix,
    TruncatedSeries,
    to_complex,
)
from .precision import (
    bits_for_digits,
    default_precision,
    half_precision_tolerance,
    rounding_unit,
    working_precision,
)
from .series import series_add, series_derivative, series_mul, series_scale
from .linalg import determinant, determinant_report, hadamard_ratio, rounding_bound
from .newton import newton_solve

__all__ = [
    'BigComplex',
    'BigReal',
    'DEFAULT_PRECISION',
    'MIN_PRECISION',
    'DeterminantReport',
    'NewtonResult',
    'Pivoting',
    'SquareMatrix',
    'TruncatedSeries',
    'to_complex',
    'bits_for_digits',
    'default_precision',
    'half_precision_tolerance',
    'rounding_unit',
    'working_precision',
    'series_add',
    'series_derivative',
    'series_mul',
    'series_scale',
    'determinant',
    'determinant_report',
    'hadamard_ratio',
    'rounding_bound',
    'newton_solve',
]
