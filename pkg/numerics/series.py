"""
Truncated power-series arithmetic

All operations stay within the declared truncation orders; nothing beyond
``order`` is ever read.
"""

from mpmath import mpc, mp

from spectral_errors import InvalidInputError, SeriesMismatchError
from .types import Number, TruncatedSeries, to_complex


def _require_same_center(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.center != b.center:
        raise SeriesMismatchError(
            f"series centred at {mp.nstr(a.center, 8)} and {mp.nstr(b.center, 8)} cannot be combined",
            {"center_a": str(a.center), "center_b": str(b.center)},
        )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(a.order, b.order)"""
    _require_same_center(a, b)
    order = min(a.order, b.order)
    coeffs = []
    for j in range(order + 1):
        total = mpc(0)
        for i in range(j + 1):
            total += a.coeffs[i] * b.coeffs[j - i]
        coeffs.append(total)
    return TruncatedSeries(a.center, tuple(coeffs))


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order < 1:
        raise InvalidInputError("the derivative of an order-0 series is not determined",
                                {"order": a.order})
    return TruncatedSeries(a.center, tuple((j + 1) * a.coeffs[j + 1] for j in range(a.order)))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _require_same_center(a, b)
    order = min(a.order, b.order)
    return TruncatedSeries(a.center, tuple(a.coeffs[j] + b.coeffs[j] for j in range(order + 1)))


def series_scale(a: TruncatedSeries, factor: Number) -> TruncatedSeries:
    factor = to_complex(factor)
    return TruncatedSeries(a.center, tuple(factor * c for c in a.coeffs))
