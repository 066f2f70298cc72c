"""
Hankel-determinant quantization solved by Newton iteration

The determinants are assembled from weighted coefficients w_k·f_k with
w_k = ρ^k / s. The geometric factor rescales the expansion variable and the
uniform factor rescales every entry, so neither moves the zero locus. The
weights are fixed at the seed, which keeps the residual analytic in the
unknowns.
"""

from typing import Callable, List, Optional, Sequence, Tuple

from mpmath import mp, mpc, mpf

from logging_config import get_logger
from spectral_errors import (
    ConvergenceError,
    InvalidInputError,
    NewtonDivergenceError,
    PrecisionLimitedError,
    SingularJacobianError,
    SpectralError,
)
from numerics.linalg import determinant_report, hadamard_ratio
from numerics.newton import newton_solve
from numerics.precision import rounding_unit
from numerics.types import Number, to_complex
from perturb import harmonic_estimate
from potentials import IntegerFamily, Potential, admissible_minimum, taylor_coeffs
from .hankel import coefficient_index, hankel_det, hankel_matrix
from .riccati import regularized_coeffs, riccati_coeffs_from_series
from .types import HankelSystem, Parity, RiccatiCoefficients, RpmSolution, Sigma, Variant

logger = get_logger("rpm.solver")

ADVICE = "raise the precision, change the displacement d, or start from a nearby guess"

SEARCH_POINTS = 17
# a root persists when dimension D+1 moves it by at most this fraction of the search radius
PERSISTENCE = mpf(1) / 100


def coefficient_weights(coeffs: Sequence[mpc]) -> List[mpf]:
    radii = [abs(c) ** (mpf(1) / k) for k, c in enumerate(coeffs) if k >= 1 and c != 0]
    rho = 1 / max(radii) if radii else mpf(1)
    top = max(abs(c) * rho ** k for k, c in enumerate(coeffs))
    if top == 0:
        top = mpf(1)
    return [rho ** k / top for k in range(len(coeffs))]


def _entries_negligible(rc: RiccatiCoefficients, system: HankelSystem) -> bool:
    lowest = min(coefficient_index(1, 1, system.d, parity) for parity in system.parities)
    scale = max([mpf(1)] + [abs(c) for c in rc.coeffs[:2]])
    threshold = rounding_unit(16) * scale
    return all(abs(c) <= threshold for c in rc.coeffs[lowest:system.required_coefficients + 1])


def _check_conditioning(rc: RiccatiCoefficients, system: HankelSystem, weights: Sequence[mpf]) -> None:
    for parity in system.parities:
        report = determinant_report(hankel_matrix(rc, system.D, system.d, parity, weights))
        if report.precision_limited:
            raise PrecisionLimitedError(
                f"{parity.value} Hankel determinant with D={system.D} is below its rounding bound",
                mp.prec,
                {"D": system.D, "d": system.d, "value": mp.nstr(abs(report.value), 5),
                 "bound": mp.nstr(report.rounding_bound, 5)},
            )


def _conditioning_ratio(rc: RiccatiCoefficients, system: HankelSystem, weights: Sequence[mpf]) -> mpf:
    return max(hadamard_ratio(hankel_matrix(rc, system.D, system.d, parity, weights))
               for parity in system.parities)


def _nudge(value: mpc) -> mpc:
    # shifted towards lower energies
    return value - mpf(2) ** -4 * max(mpf(1), abs(value))


def _newton(residual: Callable, guess: Sequence[mpc], system: HankelSystem, advisory: bool,
            step_tol: Optional[mpf] = None):
    tol = rounding_unit(16) ** system.D
    try:
        try:
            return newton_solve(residual, guess, tol=tol, step_tol=step_tol)
        except SingularJacobianError as e:
            # seeds on a symmetry point of the determinant have a vanishing derivative
            shifted = [_nudge(g) for g in guess]
            logger.debug(f"{e.message}; restarting from {mp.nstr(shifted[0], 10)}")
            return newton_solve(residual, shifted, tol=tol, step_tol=step_tol)
    except (NewtonDivergenceError, SingularJacobianError) as e:
        raise ConvergenceError(
            f"{system.variant.value} RPM with D={system.D}, d={system.d} failed: {e.message}",
            {**e.details, "advice": ADVICE, "D": system.D, "d": system.d},
        ) from e
    except PrecisionLimitedError as e:
        if not advisory:
            raise
        raise ConvergenceError(
            f"{system.variant.value} RPM with D={system.D} stalled at {mp.prec} bits",
            {**e.details, "advice": ADVICE},
        ) from e


def _step_off(value: mpc) -> mpc:
    step = mpf(2) ** -10
    return value + step * max(mpf(1), abs(value)) * mpc(1, 1)


def solve_general(
    p: Potential,
    D: int,
    d: int = 0,
    x0: Optional[Number] = None,
    guess_E: Optional[Number] = None,
    guess_f0: Number = 0,
    v: int = 0,
    advisory: bool = False,
) -> RpmSolution:
    """Solve the paired even/odd Hankel conditions for (E, f0) about x0

    Defaults: x0 is the admissible minimum, E starts from the harmonic estimate
    of level v and f0 from zero.
    """
    system = HankelSystem(D=D, d=d, variant=Variant.GENERAL)
    K = system.required_coefficients
    center = to_complex(x0) if x0 is not None else admissible_minimum(p).location
    E_seed = to_complex(guess_E) if guess_E is not None else harmonic_estimate(p, v).value
    f0_seed = to_complex(guess_f0)
    V = taylor_coeffs(p, center, K - 1)

    seed = riccati_coeffs_from_series(V, E_seed, f0_seed, K)
    weights = coefficient_weights(seed.coeffs)
    if _entries_negligible(seed, system):
        logger.info(f"Seed is an exact root for D={D}, d={d}: E={mp.nstr(E_seed, 20)}")
        return RpmSolution(E=E_seed, f0=f0_seed, D=D, d=d, residual_norm=mpf(0),
                           variant=Variant.GENERAL, precision=mp.prec)
    if not advisory:
        _check_conditioning(riccati_coeffs_from_series(V, _step_off(E_seed), _step_off(f0_seed), K), system, weights)

    def residual(x):
        rc = riccati_coeffs_from_series(V, x[0], x[1], K)
        return [hankel_det(rc, D, d, Parity.EVEN, weights), hankel_det(rc, D, d, Parity.ODD, weights)]

    result = _newton(residual, [E_seed, f0_seed], system, advisory)
    E, f0 = result.root
    nearby = riccati_coeffs_from_series(V, _step_off(E), _step_off(f0), K)
    logger.debug(f"General RPM D={D}, d={d}: E={mp.nstr(E, 25)} after {result.iterations} iterations")
    return RpmSolution(E=E, f0=f0, D=D, d=d, residual_norm=result.residual_norm, variant=Variant.GENERAL,
                       precision=mp.prec, iterations=result.iterations,
                       conditioning=_conditioning_ratio(nearby, system, weights))


def _regularized_family(m: int, lam: Number) -> IntegerFamily:
    R = (mp.mpf(lam) / m) ** (mpf(1) / (2 * (m + 1)))
    return IntegerFamily(m, 1, R)


def regularized_seed(m: int, lam: Number, v: int = 0) -> mpc:
    """Harmonic estimate of x^(2m) + λ/x² at its −iR minimum"""
    return harmonic_estimate(_regularized_family(m, lam), v).value


def search_radius(m: int, lam: Number, v: int = 0) -> mpf:
    """2(2v+1) harmonic level spacings; four spacings for the ground level"""
    family = _regularized_family(m, lam)
    spacing = abs(harmonic_estimate(family, v + 1).value - harmonic_estimate(family, v).value)
    return 2 * (2 * v + 1) * spacing


def solve_regularized(
    m: int,
    lam: Number,
    D: int,
    d: int = 0,
    guess_E: Optional[Number] = None,
    branch: str = "-",
    v: int = 0,
    advisory: bool = False,
) -> RpmSolution:
    """Scalar Newton on the plain Hankel determinant of the regularized coefficients

    Without a guess the seed is the root chosen by select_regularized_root,
    or the harmonic estimate when no root in the window persists.
    """
    system = HankelSystem(D=D, d=d, variant=Variant.REGULARIZED)
    K = system.required_coefficients
    sigma = Sigma(lam, branch).value
    E_seed = to_complex(guess_E) if guess_E is not None else _search_seed(m, lam, D, d, v, branch)

    seed = regularized_coeffs(m, sigma, E_seed, K)
    weights = coefficient_weights(seed.coeffs)
    if _entries_negligible(seed, system):
        logger.info(f"Seed is an exact root for D={D}, d={d}: E={mp.nstr(E_seed, 20)}")
        return RpmSolution(E=E_seed, D=D, d=d, residual_norm=mpf(0), variant=Variant.REGULARIZED,
                           precision=mp.prec)
    if not advisory:
        _check_conditioning(regularized_coeffs(m, sigma, _step_off(E_seed), K), system, weights)

    def residual(x):
        return [hankel_det(regularized_coeffs(m, sigma, x[0], K), D, d, Parity.PLAIN, weights)]

    # exactly solvable models give roots of multiplicity D; their noise floor sits near 2^(-prec/D)
    result = _newton(residual, [E_seed], system, advisory, step_tol=mpf(2) ** (-(mp.prec // 3)))
    E = result.root[0]
    nearby = regularized_coeffs(m, sigma, _step_off(E), K)
    logger.debug(f"Regularized RPM m={m}, D={D}, d={d}: E={mp.nstr(E, 25)} after {result.iterations} iterations")
    return RpmSolution(E=E, D=D, d=d, residual_norm=result.residual_norm, variant=Variant.REGULARIZED,
                       precision=mp.prec, iterations=result.iterations,
                       conditioning=_conditioning_ratio(nearby, system, weights))


def _same_root(a: mpc, b: mpc) -> bool:
    return abs(a - b) <= mpf(10) ** -10 * max(1, abs(a))


def regularized_roots(
    m: int,
    lam: Number,
    D: int,
    d: int = 0,
    center: Optional[Number] = None,
    radius: Optional[Number] = None,
    points: int = SEARCH_POINTS,
    branch: str = "-",
) -> List[RpmSolution]:
    """Distinct Hankel roots reached from a line of seeds across [center − radius, center + radius]

    Roots that Newton carries further than twice the radius from the centre
    are dropped.
    """
    if points < 1:
        raise InvalidInputError("a root search needs at least one seed")
    center = to_complex(center) if center is not None else regularized_seed(m, lam)
    radius = mp.mpf(radius) if radius is not None else search_radius(m, lam)
    offsets = [mpf(0)] if points == 1 else [-radius + 2 * radius * k / (points - 1) for k in range(points)]
    roots: List[RpmSolution] = []
    for offset in offsets:
        try:
            solution = solve_regularized(m, lam, D, d, center + offset, branch, advisory=True)
        except SpectralError as e:
            logger.debug(f"Seed {mp.nstr(center + offset, 10)} failed: {e.message}")
            continue
        if abs(solution.E - center) > 2 * radius:
            continue
        if not any(_same_root(solution.E, known.E) for known in roots):
            roots.append(solution)
    return roots


def _round_trip(m: int, lam: Number, D: int, d: int, E: mpc, branch: str, v: int) -> Tuple[mpc, mpc]:
    """Root at D+1 seeded on E, and the root at D seeded back from it"""
    forward = solve_regularized(m, lam, D + 1, d, E, branch, v, advisory=True).E
    back = solve_regularized(m, lam, D, d, forward, branch, v, advisory=True).E
    return forward, back


def select_regularized_root(m: int, lam: Number, D: int, d: int = 0, v: int = 0,
                            branch: str = "-") -> RpmSolution:
    """Root of the D-dimensional determinant for level v that dimensions D+1 and D+2 reproduce

    Candidates come from regularized_roots over search_radius about the
    harmonic estimate. A candidate E_D persists when Newton at D+1 seeded on
    it lands within PERSISTENCE·radius and Newton at D seeded back from there
    returns E_D, and the same holds one dimension higher. A round trip that
    returns elsewhere adds that root to the candidates. Level 0 takes the
    lowest persisting root by real part, higher levels the persisting root
    nearest their estimate.
    """
    center = regularized_seed(m, lam, v)
    radius = search_radius(m, lam, v)
    candidates = [s.E for s in regularized_roots(m, lam, D, d, center, radius, branch=branch)]
    order = (lambda E: E.real) if v == 0 else (lambda E: abs(E - center))
    tolerance = PERSISTENCE * radius
    visited: List[mpc] = []

    while len(visited) < 4 * SEARCH_POINTS:
        pending = sorted((E for E in candidates if not any(_same_root(E, seen) for seen in visited)), key=order)
        if not pending:
            break
        E = pending[0]
        visited.append(E)
        try:
            forward, back = _round_trip(m, lam, D, d, E, branch, v)
            if not _same_root(back, E):
                if abs(back - center) <= 2 * radius and not any(_same_root(back, c) for c in candidates):
                    candidates.append(back)
                logger.debug(f"Root {mp.nstr(E, 15)} returns to {mp.nstr(back, 15)} via D={D + 1}")
                continue
            if abs(forward - E) > tolerance:
                continue
            further, again = _round_trip(m, lam, D + 1, d, forward, branch, v)
            if not _same_root(again, forward) or abs(further - forward) > tolerance:
                continue
        except SpectralError as e:
            logger.debug(f"Root {mp.nstr(E, 15)} has no counterpart above D={D}: {e.message}")
            continue
        logger.info(f"Selected E={mp.nstr(E, 15)} among {len(candidates)} roots for D={D}, d={d}")
        return solve_regularized(m, lam, D, d, E, branch, v, advisory=True)
    raise ConvergenceError(
        f"no Hankel root within {mp.nstr(radius, 5)} of {mp.nstr(center, 10)} persists from D={D} to D={D + 2}",
        {"advice": ADVICE, "D": D, "d": d, "roots": len(candidates)},
    )


def _search_seed(m: int, lam: Number, D: int, d: int, v: int, branch: str) -> mpc:
    try:
        return select_regularized_root(m, lam, D, d, v, branch).E
    except ConvergenceError as e:
        logger.warning(f"{e.message}; seeding from the harmonic estimate")
        return regularized_seed(m, lam, v)
