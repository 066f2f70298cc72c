"""
Records produced by the perturbative machinery
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from mpmath import mpc, mpf

from spectral_errors import InvalidInputError


@dataclass(frozen=True)
class ScaledProblem:
    """H = V0 + √V2·(−d²/ds² + s² + Σ_j c_j b^j s^(j+2)) about x0, with x = x0 + b·s"""
    x0: mpc
    V0: mpc
    V2: mpc
    b: mpf
    c: Tuple[mpc, ...]

    def __post_init__(self):
        if len(self.c) < 1:
            raise InvalidInputError("a scaled problem needs at least one perturbation coefficient")
        if self.b <= 0:
            raise InvalidInputError("the scale factor b must be positive")

    @property
    def J(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class PerturbationSeries:
    v: int
    coeffs: Tuple[mpc, ...]
    basis_size: int
    diagnostics: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def flagged(self) -> bool:
        return bool(self.diagnostics)


@dataclass(frozen=True)
class EnergyEstimate:
    value: mpc
    order: Union[int, str]
    error_bar: Optional[mpf] = None

    def __post_init__(self):
        if self.error_bar is not None and self.error_bar < 0:
            raise InvalidInputError("an error bar cannot be negative")


@dataclass(frozen=True)
class ErrorCurveRow:
    n: int
    log10_rel_err: mpf


@dataclass(frozen=True)
class ErrorCurve:
    rows: Tuple[ErrorCurveRow, ...]
    floor: mpf
    best_order: int
    best_log_error: mpf
    oscillation_onset: Optional[int]

    @property
    def oscillates(self) -> bool:
        return self.oscillation_onset is not None
