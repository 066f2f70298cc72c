"""
Newton iteration with a centrally differenced Jacobian

Scalar problems get a multiplicity-aware step: when successive Newton steps
shrink by a stable ratio r the root has multiplicity m/(1-r) (m being the
multiplier in use), and the step is scaled accordingly. Hankel determinants
of exactly solvable models have roots of multiplicity D, where plain Newton
would only converge linearly.
"""

from typing import Callable, List, Optional, Sequence

from mpmath import mp, mpc, mpf

from logging_config import get_logger
from spectral_errors import (
    InvalidInputError,
    NewtonDivergenceError,
    PrecisionLimitedError,
    SingularJacobianError,
)
from .precision import half_precision_tolerance
from .types import NewtonResult, Number, to_complex

logger = get_logger("numerics.newton")

Residual = Callable[[Sequence[mpc]], Sequence[Number]]


def _evaluate(residual: Residual, x: Sequence[mpc], k: int) -> List[mpc]:
    values = [to_complex(v) for v in residual(tuple(x))]
    if len(values) != k:
        raise InvalidInputError(f"residual returned {len(values)} components for {k} unknowns")
    return values


def _norm(values: Sequence[mpc]) -> mpf:
    return max(abs(v) for v in values)


def _jacobian(residual: Residual, x: Sequence[mpc], k: int) -> mp.matrix:
    relative_step = half_precision_tolerance()
    jac = mp.matrix(k, k)
    for j in range(k):
        h = relative_step * max(mpf(1), abs(x[j]))
        forward = list(x)
        backward = list(x)
        forward[j] += h
        backward[j] -= h
        f_plus = _evaluate(residual, forward, k)
        f_minus = _evaluate(residual, backward, k)
        for i in range(k):
            jac[i, j] = (f_plus[i] - f_minus[i]) / (2 * h)
    return jac


def _update_multiplicity(ratio: mpc, previous_ratio: Optional[mpc], current: int) -> int:
    if previous_ratio is None or abs(ratio - previous_ratio) > 0.05 or abs(ratio.imag) > 0.05:
        return current
    r = ratio.real
    if not (0.3 < abs(r) < 0.95):
        return current
    return max(1, int(mp.nint(current / (1 - r))))


def newton_solve(
    residual: Residual,
    guess: Sequence[Number],
    tol: Number,
    max_iter: int = 100,
    step_tol: Optional[Number] = None,
) -> NewtonResult:
    """Solve residual(x) = 0 for a k-vector x starting from ``guess``.

    Converges when ||residual(x)|| <= tol, or when the Newton step falls below
    step_tol * max(1, ||x||) (default step_tol is 2^(-prec/2)).
    """
    x = [to_complex(g) for g in guess]
    k = len(x)
    if k < 1:
        raise InvalidInputError("newton_solve needs at least one unknown")
    tol = mp.mpf(tol)
    step_tol = half_precision_tolerance() if step_tol is None else mp.mpf(step_tol)

    values = _evaluate(residual, x, k)
    multiplier = 1
    previous_raw: Optional[mpc] = None
    previous_ratio: Optional[mpc] = None
    last_step_norm = None

    for iteration in range(1, max_iter + 1):
        norm = _norm(values)
        if norm <= tol:
            return NewtonResult(root=tuple(x), residual_norm=norm, iterations=iteration - 1)

        jac = _jacobian(residual, x, k)
        try:
            delta = mp.lu_solve(jac, mp.matrix([-v for v in values]))
        except ZeroDivisionError:
            raise SingularJacobianError(
                f"Jacobian is numerically singular at iteration {iteration}", x
            )
        raw = [to_complex(delta[i]) for i in range(k)]

        if k == 1:
            if previous_raw is not None and previous_raw != 0:
                ratio = raw[0] / previous_raw
                updated = _update_multiplicity(ratio, previous_ratio, multiplier)
                if updated != multiplier:
                    logger.debug(f"Root multiplicity estimate changed {multiplier} -> {updated}")
                    multiplier = updated
                    previous_ratio = None
                else:
                    previous_ratio = ratio
            previous_raw = raw[0]

        step = [multiplier * d for d in raw]
        x = [xi + si for xi, si in zip(x, step)]
        values = _evaluate(residual, x, k)
        last_step_norm = _norm(step)
        scale = max(mpf(1), _norm(x))
        logger.debug(f"Newton iteration {iteration}: |step|={mp.nstr(last_step_norm, 5)}, "
                     f"|residual|={mp.nstr(_norm(values), 5)}")

        if last_step_norm <= step_tol * scale:
            return NewtonResult(root=tuple(x), residual_norm=_norm(values), iterations=iteration)

    scale = max(mpf(1), _norm(x))
    if last_step_norm is not None and last_step_norm <= mp.sqrt(step_tol) * scale:
        raise PrecisionLimitedError(
            f"Newton steps stalled at {mp.nstr(last_step_norm / scale, 5)} relative; rounding dominates",
            mp.prec,
            {"last_iterate": [str(v) for v in x]},
        )
    raise NewtonDivergenceError(f"Newton did not converge in {max_iter} iterations", x, max_iter)
