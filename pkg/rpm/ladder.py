"""
D-ladders: successive Hankel dimensions, each seeded by the previous root

|E_D − E_(D−1)| is the error estimate attached to rung D. A rung whose
determinants are rounding dominated is re-run at doubled precision; on the
last allowed attempt the flag is only advisory. A rung whose Newton solve
fails at displacement d is retried at d+1.
"""

from typing import Any, Callable, Dict, List, Optional, Tuple

from mpmath import mp, mpc, mpf
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from logging_config import get_logger
from spectral_errors import ConvergenceError, InvalidInputError, PrecisionLimitedError, SpectralError
from numerics.precision import bits_for_digits, default_precision, working_precision
from numerics.types import Number, to_complex
from perturb import harmonic_estimate
from potentials import IntegerFamily, Potential
from .solver import regularized_roots, regularized_seed, search_radius, solve_general, solve_regularized
from .types import LadderReport, RpmSolution

logger = get_logger("rpm.ladder")

MAX_DOUBLINGS = 2
PATIENCE = 4

# coupling continuation for the general variant
TRACK_START = 5
TRACK_RATIO = mpf(9) / 10
TRACK_D = 6
MAX_HALVINGS = 6

RungSolver = Callable[[int, Optional[RpmSolution], bool], RpmSolution]


def ladder_precision(D: int, digits: int, requested: int) -> int:
    """Bits for max(2·digits, 24 + 8·D) decimal digits, never below ``requested``"""
    return max(requested, bits_for_digits(max(2 * digits, 24 + 8 * D)))


def solve_with_escalation(solve: Callable[[bool], RpmSolution], bits: int,
                          max_doublings: int = MAX_DOUBLINGS) -> RpmSolution:
    for attempt in Retrying(retry=retry_if_exception_type(PrecisionLimitedError),
                            stop=stop_after_attempt(max_doublings + 1), reraise=True):
        with attempt:
            number = attempt.retry_state.attempt_number
            precision = bits * 2 ** (number - 1)
            if number > 1:
                logger.warning(f"Determinant is rounding dominated; retrying at {precision} bits")
            with working_precision(precision):
                return solve(number == max_doublings + 1)


def _with_displacements(solve: Callable[[int], RpmSolution], d: int) -> RpmSolution:
    try:
        return solve(d)
    except ConvergenceError as e:
        logger.info(f"d={d} failed ({e.message}); retrying with d={d + 1}")
        return solve(d + 1)


def _failure(D: int, seed: str, error: SpectralError) -> Dict[str, Any]:
    return {"D": D, "seed": seed, "error": type(error).__name__, "message": error.message,
            **{k: v for k, v in error.details.items() if isinstance(v, (str, int, float))}}


def converge(solve_at: RungSolver, D_min: int, D_max: int, digits: int = 20,
             precision: Optional[int] = None, patience: int = PATIENCE) -> LadderReport:
    """Run rungs D_min..D_max, stopping once the error estimate reaches 10^(−digits)·|E|

    The ladder also stops when ``patience`` successive estimates fail to
    improve on the smallest one so far.
    """
    if D_max < D_min + 1:
        raise InvalidInputError(f"a ladder needs D_max > D_min, got {D_min}..{D_max}",
                                {"D_min": D_min, "D_max": D_max})
    requested = precision if precision is not None else default_precision()
    relative_target = mpf(10) ** -digits
    solutions: List[RpmSolution] = []
    failures: List[Dict[str, Any]] = []
    previous: Optional[RpmSolution] = None
    smallest: Optional[mpf] = None
    stale = 0

    for D in range(D_min, D_max + 1):
        bits = ladder_precision(D, digits, requested)
        attempts = [("previous", previous), ("original", None)] if previous is not None else [("original", None)]
        solution = None
        for name, seed in attempts:
            try:
                solution = solve_with_escalation(lambda advisory: solve_at(D, seed, advisory), bits)
                break
            except SpectralError as e:
                logger.warning(f"Rung D={D} from the {name} seed failed: {e.message}")
                failures.append(_failure(D, name, e))
        if solution is None:
            continue

        estimate = abs(solution.E - previous.E) if previous is not None else None
        solution = solution.with_error_estimate(estimate)
        solutions.append(solution)
        previous = solution
        logger.info(f"Rung D={D}: E={mp.nstr(solution.E, 25)}"
                    + (f", estimate {mp.nstr(estimate, 3)}" if estimate is not None else ""))
        if estimate is None:
            continue
        if estimate <= relative_target * max(1, abs(solution.E)):
            break
        if smallest is None or estimate < smallest:
            smallest, stale = estimate, 0
        else:
            stale += 1
            if stale >= patience:
                logger.warning(f"Ladder stalled: no improvement on {mp.nstr(smallest, 3)} in {patience} rungs")
                break

    target = relative_target * max(1, abs(previous.E)) if previous is not None else None
    return LadderReport(solutions=tuple(solutions), failures=tuple(failures), target=target)


def converge_general(
    p: Potential,
    D_min: int = 2,
    D_max: int = 10,
    d: int = 0,
    v: int = 0,
    x0: Optional[Number] = None,
    guess_E: Optional[Number] = None,
    guess_f0: Number = 0,
    digits: int = 20,
    precision: Optional[int] = None,
) -> LadderReport:
    def solve_at(D: int, seed: Optional[RpmSolution], advisory: bool) -> RpmSolution:
        E, f0 = (seed.E, seed.f0) if seed is not None else (guess_E, guess_f0)
        return _with_displacements(lambda dd: solve_general(p, D, dd, x0, E, f0, v, advisory), d)

    return converge(solve_at, D_min, D_max, digits, precision)


def converge_regularized(
    m: int,
    lam: Number,
    D_min: int = 2,
    D_max: int = 10,
    d: int = 0,
    v: int = 0,
    branch: str = "-",
    guess_E: Optional[Number] = None,
    digits: int = 20,
    precision: Optional[int] = None,
) -> LadderReport:
    """Regularized ladder; without a guess the first rung selects its root by search"""
    def solve_at(D: int, seed: Optional[RpmSolution], advisory: bool) -> RpmSolution:
        start = seed.E if seed is not None else guess_E
        return _with_displacements(lambda dd: solve_regularized(m, lam, D, dd, start, branch, v, advisory), d)

    return converge(solve_at, D_min, D_max, digits, precision)


def scan_regularized(
    m: int,
    lam: Number,
    D: int,
    d: int = 0,
    center: Optional[Number] = None,
    radius: Optional[Number] = None,
    points: int = 9,
    branch: str = "-",
) -> List[RpmSolution]:
    """Distinct Hankel roots reached from a line of seeds across the window, nearest first"""
    center = to_complex(center) if center is not None else regularized_seed(m, lam)
    radius = mp.mpf(radius) if radius is not None else search_radius(m, lam)
    roots = regularized_roots(m, lam, D, d, center, radius, points, branch)
    return sorted(roots, key=lambda s: abs(s.E - center))


def _extrapolate(history: List[Tuple[mpf, mpc, mpc]], R: mpf) -> Tuple[mpc, mpc]:
    if len(history) == 1:
        return history[0][1], history[0][2]
    (R_a, r_a, f_a), (R_b, r_b, f_b) = history[-2:]
    t = (R - R_b) / (R_b - R_a)
    return r_b + t * (r_b - r_a), f_b + t * (f_b - f_a)


def track_general(
    p: IntegerFamily,
    D: int = TRACK_D,
    d: int = 0,
    v: int = 0,
    start: Number = TRACK_START,
    ratio: Number = TRACK_RATIO,
    precision: Optional[int] = None,
) -> RpmSolution:
    """Follow level v of the general determinants from coupling R = start down to p.R

    The starting root is climbed from D = 2 at R = start. Each step predicts
    E as the harmonic estimate plus the linearly extrapolated remainder
    E − E_h, and f0 by the same extrapolation. A corrected root further than
    a quarter of a level spacing from its prediction, or a failed solve,
    halves the step.
    """
    if D < 2:
        raise InvalidInputError(f"continuation needs D >= 2, got {D}", {"D": D})
    target = p.R
    R = max(mp.mpf(start), target)
    bits = ladder_precision(D, 20, precision if precision is not None else default_precision())
    with working_precision(bits):
        origin = IntegerFamily(p.m, p.n, R)
        current = solve_general(origin, 2, d, v=v, advisory=True)
        for rung in range(3, D + 1):
            current = solve_general(origin, rung, d, guess_E=current.E, guess_f0=current.f0, v=v, advisory=True)
        history = [(R, current.E - harmonic_estimate(origin, v).value, current.f0)]
        base = -mp.log(mp.mpf(ratio))
        step = base
        halvings = 0
        while R > target:
            R_next = max(target, R * mp.exp(-step))
            family = IntegerFamily(p.m, p.n, R_next)
            E_h = harmonic_estimate(family, v).value
            spacing = abs(harmonic_estimate(family, v + 1).value - E_h)
            remainder, f0 = _extrapolate(history, R_next)
            try:
                candidate = solve_general(family, D, d, guess_E=E_h + remainder, guess_f0=f0, v=v, advisory=True)
                drift = abs(candidate.E - E_h - remainder)
                if drift > spacing / 4:
                    raise ConvergenceError(f"root jumped by {mp.nstr(drift, 5)} at R={mp.nstr(R_next, 10)}")
            except SpectralError as e:
                halvings += 1
                if halvings > MAX_HALVINGS:
                    raise ConvergenceError(
                        f"continuation of m={p.m}, n={p.n} stalled at R={mp.nstr(R, 10)}: {e.message}",
                        {"advice": "start from a larger coupling or use a smaller ratio", "R": mp.nstr(R, 10)},
                    ) from e
                step /= 2
                continue
            R = R_next
            history.append((R, candidate.E - E_h, candidate.f0))
            current = candidate
            halvings = 0
            step = min(2 * step, base)
            logger.debug(f"Tracked E={mp.nstr(current.E, 15)} at R={mp.nstr(R, 10)}")
    logger.info(f"Continuation reached R={mp.nstr(target, 10)} with E={mp.nstr(current.E, 20)} at D={D}")
    return current
