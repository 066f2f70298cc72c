"""
Harmonic rescaling about an admissible minimum
"""

from mpmath import mp

from logging_config import get_logger
from spectral_errors import InvalidInputError, StationarityError
from numerics.precision import half_precision_tolerance
from potentials import Potential, StationaryPoint, taylor_coeffs
from .types import ScaledProblem

logger = get_logger("perturb.scaling")


def scale(p: Potential, x0: StationaryPoint, J: int) -> ScaledProblem:
    """Taylor-expand through order J+2 and divide out the harmonic part"""
    if J < 1:
        raise InvalidInputError(f"J must be at least 1, got {J}", {"J": J})
    if not x0.admissible:
        raise InvalidInputError(
            f"stationary point {mp.nstr(x0.location, 15)} is not admissible",
            {"failed_conditions": list(x0.failed_conditions)},
        )
    series = taylor_coeffs(p, x0.location, J + 2)
    V1, V2 = series.coefficient(1), series.coefficient(2)
    if abs(V1) > half_precision_tolerance() * max(abs(V2 * x0.location), 1):
        raise StationarityError(
            f"|V'(x0)| = {mp.nstr(abs(V1), 5)} is above the stationarity tolerance",
            {"x0": str(x0.location), "V1": str(V1)},
        )
    b = V2.real ** (-mp.mpf(1) / 4)
    c = tuple(series.coefficient(j + 2) / V2 for j in range(1, J + 1))
    logger.debug(f"Scaled {p.label} at {mp.nstr(x0.location, 10)}: V2={mp.nstr(V2, 10)}, b={mp.nstr(b, 10)}")
    return ScaledProblem(x0=x0.location, V0=series.coefficient(0), V2=V2, b=b, c=c)
