"""
Location and classification of complex stationary points
"""

from typing import List, Tuple

from mpmath import mp, mpc

from logging_config import get_logger
from spectral_errors import ClassificationError
from numerics.precision import half_precision_tolerance
from .families import taylor_coeffs
from .types import Potential, StationaryPoint

logger = get_logger("potentials.stationary")

CONDITION_CURVATURE = "Re V'' > 0"
CONDITION_REALITY = "|Im V''| <= 2^(-prec/2)|V''|"
CONDITION_LOWER = "Im x0 < 0"
CONDITION_AXIS = "x0 on the negative imaginary axis"


def _failed_conditions(location: mpc, second: mpc) -> Tuple[str, ...]:
    tol = half_precision_tolerance()
    failed = []
    if second.real <= 0:
        failed.append(CONDITION_CURVATURE)
    if abs(second.imag) > tol * abs(second):
        failed.append(CONDITION_REALITY)
    if location.imag >= 0:
        failed.append(CONDITION_LOWER)
    if abs(location.real) > tol * abs(location):
        failed.append(CONDITION_AXIS)
    return tuple(failed)


def classify(p: Potential, location: mpc, index: int = 0) -> StationaryPoint:
    series = taylor_coeffs(p, location, 2)
    second = 2 * series.coefficient(2)
    failed = _failed_conditions(location, second)
    return StationaryPoint(
        location=location,
        second_derivative=second,
        admissible=not failed,
        index=index,
        failed_conditions=failed,
    )


def stationary_points(p: Potential) -> List[StationaryPoint]:
    points = [classify(p, x, k) for k, x in enumerate(p.stationary_locations())]
    logger.debug(f"{p.label}: {len(points)} stationary points, "
                 f"{sum(pt.admissible for pt in points)} admissible")
    return points


def admissible_minimum(p: Potential) -> StationaryPoint:
    """The unique stationary point on the negative imaginary axis with real-positive V″"""
    points = stationary_points(p)
    admissible = [pt for pt in points if pt.admissible]
    if len(admissible) == 1:
        return admissible[0]
    if len(admissible) > 1:
        raise ClassificationError(
            f"{p.label} has {len(admissible)} admissible stationary points",
            "uniqueness",
            {"locations": [str(pt.location) for pt in admissible]},
        )
    on_axis = [pt for pt in points if CONDITION_AXIS not in pt.failed_conditions
               and CONDITION_LOWER not in pt.failed_conditions]
    if on_axis:
        condition = on_axis[0].failed_conditions[0]
        details = {"location": str(on_axis[0].location),
                   "second_derivative": mp.nstr(on_axis[0].second_derivative, 20)}
    else:
        condition = CONDITION_AXIS
        details = {}
    raise ClassificationError(f"{p.label} has no admissible stationary point: {condition} fails",
                              condition, details)
