"""
Rayleigh–Schrödinger perturbation series for −d²/ds² + s² + Σ_j c_j b^j s^(j+2)

States are coefficient lists over the unnormalized oscillator functions
φ_n = H_n(s)·exp(−s²/2). In that basis

    s·φ_n = φ_(n+1)/2 + n·φ_(n−1)        (H0 φ_n = (2n+1) φ_n)

so every matrix element is rational and no square roots enter. Corrections
use intermediate normalization (the φ_v component of ψ_k vanishes for k ≥ 1),
which makes ε_k the φ_v component of Σ_j c_j s^(j+2) ψ_(k−j).
"""

from typing import List, Optional, Tuple

from mpmath import mp, mpc

from logging_config import get_logger
from spectral_errors import InvalidInputError
from numerics.precision import half_precision_tolerance
from .types import PerturbationSeries, ScaledProblem

logger = get_logger("perturb.rayleigh_schrodinger")

Vector = List[mpc]


def apply_position(vector: Vector, cap: int) -> Tuple[Vector, bool]:
    """s·vector, dropping components above index ``cap``; reports whether any were dropped"""
    out = [mpc(0)] * min(len(vector) + 1, cap + 1)
    truncated = False
    for n, a in enumerate(vector):
        if a == 0:
            continue
        if n + 1 <= cap:
            out[n + 1] += a / 2
        else:
            truncated = True
        if n > 0:
            out[n - 1] += n * a
    return out, truncated


def _component(vector: Vector, n: int) -> mpc:
    return vector[n] if n < len(vector) else mpc(0)


def _recursion(sp: ScaledProblem, v: int, N: int, cap: int) -> Tuple[List[mpc], bool]:
    J = sp.J
    truncated = False

    def position_powers(vector: Vector, highest: int) -> List[Vector]:
        nonlocal truncated
        powers = [vector]
        for _ in range(highest):
            shifted, dropped = apply_position(powers[-1], cap)
            truncated = truncated or dropped
            powers.append(shifted)
        return powers

    ground = [mpc(0)] * v + [mpc(1)]
    psi: List[Vector] = [ground]
    powers: List[List[Vector]] = [position_powers(ground, min(J, N) + 2)]
    eps: List[mpc] = [mpc(2 * v + 1)]

    for k in range(1, N + 1):
        jmax = min(k, J)
        eps.append(sum((sp.c[j - 1] * _component(powers[k - j][j + 2], v) for j in range(1, jmax + 1)),
                       mpc(0)))
        if k == N:
            break
        length = max(max(len(powers[k - j][j + 2]) for j in range(1, jmax + 1)),
                     max(len(psi[k - j]) for j in range(1, k + 1)))
        rhs = [mpc(0)] * length
        for j in range(1, k + 1):
            for n, a in enumerate(psi[k - j]):
                rhs[n] += eps[j] * a
        for j in range(1, jmax + 1):
            for n, a in enumerate(powers[k - j][j + 2]):
                rhs[n] -= sp.c[j - 1] * a
        correction = [mpc(0) if n == v else rhs[n] / (2 * (n - v)) for n in range(length)]
        psi.append(correction)
        powers.append(position_powers(correction, min(J, N - k) + 2))

    return eps, truncated


def _agree(a: List[mpc], b: List[mpc]) -> bool:
    tol = half_precision_tolerance()
    scale = max(abs(x) for x in b)
    return all(abs(x - y) <= tol * scale for x, y in zip(a, b))


def _diagnose(eps: List[mpc]) -> Tuple[str, ...]:
    tol = half_precision_tolerance()
    messages = []
    running = mp.mpf(0)
    for j, e in enumerate(eps):
        running = max(running, abs(e))
        if abs(e.imag) > tol * running:
            messages.append(f"eps_{j} has imaginary part {mp.nstr(e.imag, 5)}")
        if j % 2 == 1 and abs(e) > tol * running:
            messages.append(f"odd-order eps_{j} = {mp.nstr(e, 5)} does not vanish")
    return tuple(messages)


def rs_coefficients(sp: ScaledProblem, v: int, N: int, basis_size: Optional[int] = None) -> PerturbationSeries:
    """ε_0..ε_N for level v.

    The basis cutoff starts at v + N·(J+2) unless ``basis_size`` is given and is
    doubled while truncation occurs and the coefficients still move.
    """
    if v < 0 or N < 0:
        raise InvalidInputError(f"v and N must be non-negative, got v={v}, N={N}", {"v": v, "N": N})
    cap = basis_size if basis_size is not None else v + N * (min(sp.J, N) + 2)
    if cap < v:
        raise InvalidInputError(f"basis size {cap} does not contain level {v}", {"basis_size": cap, "v": v})

    eps, truncated = _recursion(sp, v, N, cap)
    while truncated:
        cap = max(2 * cap, cap + 1)
        wider, truncated = _recursion(sp, v, N, cap)
        stable = _agree(eps, wider)
        eps = wider
        if stable:
            break
    logger.debug(f"RS series v={v} through order {N} with basis cutoff {cap}")

    diagnostics = _diagnose(eps)
    if diagnostics:
        logger.warning(f"Perturbation series v={v} flagged: {diagnostics[0]}")
    return PerturbationSeries(v=v, coeffs=tuple(eps), basis_size=cap, diagnostics=diagnostics)
