"""
Records for the Riccati–Padé solvers
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from mpmath import mp, mpc, mpf

from spectral_errors import InvalidInputError
from numerics.types import Number


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    PLAIN = "plain"


class Variant(Enum):
    GENERAL = "general"
    REGULARIZED = "regularized"


@dataclass(frozen=True)
class RiccatiCoefficients:
    """Taylor coefficients f_0..f_K of the logarithmic derivative about ``center``"""
    center: mpc
    E: mpc
    coeffs: Tuple[mpc, ...]
    f0: Optional[mpc] = None

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class HankelSystem:
    D: int
    d: int = 0
    variant: Variant = Variant.GENERAL

    def __post_init__(self):
        if self.D < 1:
            raise InvalidInputError(f"Hankel dimension must be at least 1, got {self.D}", {"D": self.D})
        if self.d < 0:
            raise InvalidInputError(f"displacement must be non-negative, got {self.d}", {"d": self.d})

    @property
    def required_coefficients(self) -> int:
        """Highest coefficient index the determinants read"""
        if self.variant is Variant.GENERAL:
            return 2 * (2 * self.D + self.d - 1) + 1
        return 2 * self.D + self.d + 1

    @property
    def parities(self) -> Tuple[Parity, ...]:
        return (Parity.EVEN, Parity.ODD) if self.variant is Variant.GENERAL else (Parity.PLAIN,)


@dataclass(frozen=True)
class Sigma:
    """Root of σ(σ−1) = λ; the "−" branch is (1 − √(1+4λ))/2"""
    lam: mpf
    branch: str = "-"

    def __post_init__(self):
        lam = mp.mpf(self.lam)
        if lam <= 0:
            raise InvalidInputError("λ must be positive", {"lam": str(lam)})
        if self.branch not in ("+", "-"):
            raise InvalidInputError(f"σ branch must be '+' or '-', got {self.branch!r}")
        object.__setattr__(self, "lam", lam)

    @property
    def value(self) -> mpf:
        root = mp.sqrt(1 + 4 * self.lam)
        return (1 + root) / 2 if self.branch == "+" else (1 - root) / 2


@dataclass(frozen=True)
class RpmSolution:
    E: mpc
    D: int
    d: int
    residual_norm: mpf
    variant: Variant
    f0: Optional[mpc] = None
    error_estimate: Optional[mpf] = None
    precision: int = 0
    iterations: int = 0
    # largest Hadamard ratio of the determinants a short step off the root; small means heavy cancellation
    conditioning: Optional[mpf] = None

    def with_error_estimate(self, estimate: Optional[mpf]) -> "RpmSolution":
        return replace(self, error_estimate=estimate)


@dataclass(frozen=True)
class LadderReport:
    solutions: Tuple[RpmSolution, ...]
    failures: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)
    target: Optional[mpf] = None

    @property
    def best(self) -> Optional[RpmSolution]:
        return self.solutions[-1] if self.solutions else None

    @property
    def converged(self) -> bool:
        best = self.best
        if best is None or best.error_estimate is None:
            return False
        return self.target is None or best.error_estimate <= self.target
