"""
Evaluation and exact Taylor expansion of the potential families
"""

from typing import List, Tuple

from mpmath import mp, mpc, mpf

from spectral_errors import BranchCutError, SingularityError
from numerics.precision import half_precision_tolerance
from numerics.types import Number, TruncatedSeries, to_complex
from .types import PowerTerm, Potential


def _check_branch(term: PowerTerm, x: mpc) -> None:
    if term.integral:
        return
    y = term.rotation * x
    if y.imag == 0 and y.real < 0:
        raise BranchCutError(f"({mp.nstr(term.rotation, 3)}·x)^{mp.nstr(term.exponent, 10)} "
                             f"is evaluated on its branch cut at x = {mp.nstr(x, 15)}",
                             {"x": str(x)})


def _power(base: mpc, exponent) -> mpc:
    if isinstance(exponent, int):
        return base ** exponent
    return mp.power(base, exponent)


def eval_potential(p: Potential, x: Number) -> mpc:
    """V(x) under the principal-branch convention"""
    x = to_complex(x)
    if x == 0:
        raise SingularityError("the potential is singular at x = 0")
    total = mpc(0)
    for term in p.terms():
        _check_branch(term, x)
        total += term.coefficient * _power(term.rotation * x, term.exponent)
    return total


def generalized_binomials(exponent, count: int) -> List[mpf]:
    """binom(p, j) for j = 0..count via the falling-factorial ratio"""
    values = [mpf(1)]
    for j in range(count):
        values.append(values[-1] * (exponent - j) / (j + 1))
    return values


def taylor_coeffs(p: Potential, x0: Number, M: int) -> TruncatedSeries:
    """V_j for j = 0..M about x0

    Each term contributes c·(k·x0)^p·binom(p, j)/x0^j.
    """
    x0 = to_complex(x0)
    if abs(x0) <= half_precision_tolerance():
        raise SingularityError(f"expansion centre {mp.nstr(x0, 10)} is too close to the singularity",
                               {"x0": str(x0)})
    coeffs = [mpc(0)] * (M + 1)
    for term in p.terms():
        _check_branch(term, x0)
        head = term.coefficient * _power(term.rotation * x0, term.exponent)
        binomials = generalized_binomials(term.exponent, M)
        inverse = 1 / x0
        scale = mpc(1)
        for j in range(M + 1):
            coeffs[j] += head * binomials[j] * scale
            scale *= inverse
    return TruncatedSeries(center=x0, coeffs=tuple(coeffs))


def derivative_residual(p: Potential, x0: Number) -> mpf:
    """|V′(x0)|"""
    return abs(taylor_coeffs(p, x0, 1).coefficient(1))


def alpha_beta_closed_forms(alpha: Number, beta: Number, T: Number) -> Tuple[mpc, ...]:
    """Orders 0..4 of the α, β family about its −iT minimum in factorized closed form"""
    a, b, T = mp.mpf(alpha), mp.mpf(beta), mp.mpf(T)
    i = mpc(0, 1)
    ring = 8 + a + b
    v0 = -T ** (2 + a) * ring / (6 + b)
    v2 = (2 + a) * ring * T ** a / 2
    v3 = i * (2 + a) * T ** (a - 1) * ring * (a - 7 - b) / 6
    v4 = -(2 + a) * ring * (a ** 2 - 8 * a - a * b + 63 + 16 * b + b ** 2) * T ** (a - 2) / 24
    return (mpc(v0), mpc(0), mpc(v2), v3, mpc(v4))


def alpha_roots(beta: Number) -> Tuple[mpc, mpc]:
    """α± at which the quadratic factor of the fourth-order coefficient vanishes"""
    b = mp.mpf(beta)
    root = mp.sqrt(mpc(-188 - 48 * b - 3 * b ** 2))
    return (4 + b / 2 + root / 2, 4 + b / 2 - root / 2)


def beta_roots(alpha: Number) -> Tuple[mpc, mpc]:
    a = mp.mpf(alpha)
    root = mp.sqrt(mpc(4 - 3 * a ** 2))
    return (a / 2 - 8 + root / 2, a / 2 - 8 - root / 2)
