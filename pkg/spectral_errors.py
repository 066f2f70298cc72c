"""
Exception hierarchy shared by the numerics, potentials, perturb and rpm packages
"""

from typing import Any, Dict, Optional, Sequence


class SpectralError(Exception):
    """Base exception: a message plus structured details for reports"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class InvalidInputError(SpectralError, ValueError):
    """A precondition on the arguments was violated"""


class SeriesMismatchError(InvalidInputError):
    """Two truncated series with different expansion centres were combined"""


class SingularityError(SpectralError):
    """Evaluation at (or too close to) the singularity at the origin"""


class BranchCutError(InvalidInputError):
    """A non-integer power was evaluated on its branch cut"""


class ClassificationError(SpectralError):
    """No stationary point satisfies the admissibility conditions"""
    def __init__(self, message: str, condition: str, details: Optional[Dict[str, Any]] = None):
        self.condition = condition
        super().__init__(message, {**(details or {}), "condition": condition})


class StationarityError(SpectralError):
    """The expansion centre is not a stationary point of the potential"""


class InsufficientCoefficientsError(SpectralError):
    """A Hankel determinant needs more Riccati coefficients than were generated"""
    def __init__(self, message: str, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(message, {"required": required, "available": available})


class NewtonDivergenceError(SpectralError):
    """Newton iteration did not converge within the iteration budget"""
    def __init__(self, message: str, last_iterate: Sequence[Any], iterations: int):
        self.last_iterate = tuple(last_iterate)
        self.iterations = iterations
        super().__init__(message, {"last_iterate": [str(x) for x in self.last_iterate],
                                   "iterations": iterations})


class SingularJacobianError(SpectralError):
    """The differenced Jacobian is numerically singular at the current iterate"""
    def __init__(self, message: str, iterate: Sequence[Any]):
        self.iterate = tuple(iterate)
        super().__init__(message, {
            "iterate": [str(x) for x in self.iterate],
            "advice": "try a different Hankel dimension/offset (D, d) or a better initial guess",
        })


class PrecisionLimitedError(SpectralError):
    """Results are dominated by rounding; the caller should escalate precision"""
    def __init__(self, message: str, precision: int, details: Optional[Dict[str, Any]] = None):
        self.precision = precision
        super().__init__(message, {**(details or {}), "precision": precision})


class ConvergenceError(SpectralError):
    """An RPM solve failed; details carry the advice for a retry"""
