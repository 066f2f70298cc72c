"""
Taylor coefficients of the logarithmic derivative f = −ψ′/ψ

General variant, about a centre x0:

    f′ − f² + V − E = 0   ⇒   (j+1)·f_(j+1) = Σ_(i≤j) f_i f_(j−i) − V_j + E·δ_(j0)

Regularized variant for V = x^(2m) + λ/x², with f = σ/x − ψ′/ψ and
σ(σ−1) = λ, f odd: f = x·Σ_j f_j x^(2j) and

    f′ + 2σf/x = f² + E − x^(2m)   ⇒   (2j+1+2σ)·f_j = Σ_(i<j) f_i f_(j−1−i) + E·δ_(j0) − δ_(jm)
"""

from mpmath import mp, mpc, mpf

from spectral_errors import InvalidInputError, SingularityError
from numerics.series import series_derivative, series_mul
from numerics.types import Number, TruncatedSeries, to_complex
from potentials import Potential, taylor_coeffs
from .types import RiccatiCoefficients


def riccati_coeffs_from_series(V: TruncatedSeries, E: Number, f0: Number, K: int) -> RiccatiCoefficients:
    if K < 0:
        raise InvalidInputError(f"K must be non-negative, got {K}", {"K": K})
    if V.order < K - 1:
        raise InvalidInputError(f"potential series of order {V.order} cannot drive {K} coefficients",
                                {"order": V.order, "K": K})
    E, f0 = to_complex(E), to_complex(f0)
    f = [f0]
    for j in range(K):
        total = sum((f[i] * f[j - i] for i in range(j + 1)), mpc(0)) - V.coeffs[j]
        if j == 0:
            total += E
        f.append(total / (j + 1))
    return RiccatiCoefficients(center=V.center, E=E, coeffs=tuple(f), f0=f0)


def riccati_coeffs(p: Potential, x0: Number, E: Number, f0: Number, K: int) -> RiccatiCoefficients:
    """f_0..f_K about x0 with f_0 = f0"""
    V = taylor_coeffs(p, x0, max(K - 1, 0))
    return riccati_coeffs_from_series(V, E, f0, K)


def residual_certificate(rc: RiccatiCoefficients, V: TruncatedSeries) -> mpf:
    """max_j |[f′ − f² + V − E]_j| over j = 0..K−1"""
    if rc.K < 1:
        return mpf(0)
    f = TruncatedSeries(rc.center, rc.coeffs)
    derivative = series_derivative(f)
    square = series_mul(f, f).truncate(rc.K - 1)
    worst = mpf(0)
    for j in range(rc.K):
        value = derivative.coeffs[j] - square.coeffs[j] + V.coeffs[j] - (rc.E if j == 0 else 0)
        worst = max(worst, abs(value))
    return worst


def regularized_coeffs(m: int, sigma: Number, E: Number, K: int) -> RiccatiCoefficients:
    """f_0..f_K of the odd regularized derivative f = x·Σ f_j x^(2j)"""
    if K < 0:
        raise InvalidInputError(f"K must be non-negative, got {K}", {"K": K})
    sigma, E = mp.mpf(sigma), to_complex(E)
    f = []
    for j in range(K + 1):
        denominator = 2 * j + 1 + 2 * sigma
        if denominator == 0:
            raise SingularityError(f"σ = {mp.nstr(sigma, 10)} makes the order-{j} recursion singular",
                                   {"sigma": str(sigma), "j": j})
        total = sum((f[i] * f[j - 1 - i] for i in range(j)), mpc(0))
        if j == 0:
            total += E
        if j == m:
            total -= 1
        f.append(total / denominator)
    return RiccatiCoefficients(center=mpc(0), E=E, coeffs=tuple(f))


def regularized_residual(rc: RiccatiCoefficients, m: int, sigma: Number) -> mpf:
    """max |[f′ + 2σf/x − f² − E + x^(2m)]_k| over powers x^k, k ≤ 2K"""
    sigma = mp.mpf(sigma)
    order = 2 * rc.K + 1
    odd = [mpc(0)] * (order + 1)
    for j, c in enumerate(rc.coeffs):
        odd[2 * j + 1] = c
    f = TruncatedSeries(mpc(0), tuple(odd))
    derivative = series_derivative(f)
    square = series_mul(f, f)
    worst = mpf(0)
    for k in range(order):
        value = derivative.coeffs[k] + 2 * sigma * odd[k + 1] - square.coeffs[k]
        if k == 0:
            value -= rc.E
        if k == 2 * m:
            value += 1
        worst = max(worst, abs(value))
    return worst
