#!/usr/bin/env python3
"""
Spectra Runner - evaluate every estimator the toolkit offers for one model,
and fan the reproduction batches (reference table, error curves) out over
worker processes
"""

import asyncio
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv
from mpmath import mp
from tqdm import tqdm

from logging_config import get_logger
from models.CompareBundle import CompareBundle
from models.CurveSummary import CurveSummary
from models.ReproReport import ReproReport
from models.tiles.EstimateTile import EstimateTile
from models.tiles.ReproEntry import ReproEntry
from numerics import TruncatedSeries, working_precision
from output_formatter import curve_rows, decimal_string, matching_digits, optional_decimal
from perturb import (
    EnergyEstimate,
    PerturbationSeries,
    best_estimate,
    error_curve,
    harmonic_estimate,
    perturbative_series,
)
from potentials import (
    IntegerFamily,
    Potential,
    ProfileRow,
    StationaryPoint,
    admissible_minimum,
    shifted_profile,
    stationary_points,
    taylor_coeffs,
)
from reference_data import MODELS, load_table1, lookup
from rpm import LadderReport, converge_general, converge_regularized, track_general
from rpm.ladder import TRACK_D, TRACK_START
from run_config import RunConfig
from spectral_errors import SpectralError

load_dotenv()

logger = get_logger("spectra_runner")

LADDER_D_MAX = 28
# first rung of regularized reference-table ladders, where the root is selected
TABLE_D_MIN = 6


def model_label(m: int, n: int) -> str:
    return f"m={m},n={n}"


def run_ladder(p: Potential, D_min: int = 2, D_max: int = LADDER_D_MAX, d: int = 0, v: int = 0,
               branch: str = "-", digits: int = 20, precision: Optional[int] = None) -> LadderReport:
    """Regularized ladder for integer models with n = 1, the general ladder otherwise

    General integer models below the continuation start are seeded by
    tracking the level down from R = TRACK_START, and their ladder starts at
    the tracking dimension.
    """
    if isinstance(p, IntegerFamily) and p.n == 1:
        return converge_regularized(p.m, p.lam, D_min, D_max, d, v, branch, digits=digits, precision=precision)
    if isinstance(p, IntegerFamily) and p.R < TRACK_START:
        start = max(D_min, TRACK_D)
        try:
            tracked = track_general(p, start, d, v, precision=precision)
        except SpectralError as e:
            logger.warning(f"Continuation failed, seeding from the harmonic estimate: {e.message}")
        else:
            return converge_general(p, start, max(D_max, start + 1), d, v, guess_E=tracked.E,
                                    guess_f0=tracked.f0, digits=digits, precision=precision)
    return converge_general(p, D_min, D_max, d, v, digits=digits, precision=precision)


def _failure_text(report: LadderReport) -> str:
    if not report.failures:
        return "no rung converged"
    last = report.failures[-1]
    return f"D={last['D']}: {last['error']}: {last['message']}"


def run_table1_entry(m: int, n: int, R: str, target: str, precision: int, digits: int,
                     D_max: int = LADDER_D_MAX, timing: bool = False) -> Dict[str, Any]:
    """One reference-table entry; runs in a worker process"""
    start = time.time()
    entry = ReproEntry(model=model_label(m, n), m=m, n=n, R=R, target=target,
                       method="regularized" if n == 1 else "general")
    try:
        with working_precision(precision):
            D_min = min(TABLE_D_MIN, D_max - 1) if n == 1 else 2
            report = run_ladder(IntegerFamily(m, n, R), D_min=D_min, D_max=D_max, digits=digits, precision=precision)
        best = report.best
        if best is None:
            entry.error = _failure_text(report)
        else:
            entry.computed = decimal_string(best.E.real)
            entry.E_im = decimal_string(best.E.imag, 5)
            entry.err_est = optional_decimal(best.error_estimate, 5)
            entry.D = best.D
            entry.matching_digits = matching_digits(entry.computed, target)
            if not report.converged:
                entry.error = f"ladder stopped at D={best.D} above its target"
    except SpectralError as e:
        entry.error = f"{type(e).__name__}: {e.message}"
    if timing:
        entry.runtime_s = f"{time.time() - start:.2f}"
    return entry.model_dump()


def run_fig2_model(m: int, n: int, R: str, N_max: int, v: int, precision: int) -> Dict[str, Any]:
    """Error curve of one model against the bundled (or freshly computed) RPM value"""
    summary = CurveSummary(model=model_label(m, n), m=m, n=n, R=R, v=v, N_max=N_max)
    rows: List[Tuple[str, str]] = []
    try:
        with working_precision(precision):
            p = IntegerFamily(m, n, R)
            known = lookup(m, n, R) if v == 0 else None
            if known is not None:
                reference = known.estimate()
            else:
                report = run_ladder(p, v=v, precision=precision)
                if report.best is None:
                    raise SpectralError(f"no RPM reference: {_failure_text(report)}")
                reference = EnergyEstimate(value=report.best.E, order="rpm",
                                           error_bar=report.best.error_estimate)
            curve = error_curve(p, v, N_max, reference)
            summary.reference = decimal_string(reference.value.real)
            summary.floor_log10 = decimal_string(mp.log10(curve.floor), 5)
            summary.best_order = curve.best_order
            summary.best_log10_rel_err = decimal_string(curve.best_log_error, 5)
            summary.oscillation_onset = curve.oscillation_onset
            summary.oscillates = curve.oscillates
            rows = curve_rows(curve)
    except SpectralError as e:
        summary.error = f"{type(e).__name__}: {e.message}"
    return {"summary": summary.model_dump(), "rows": [tuple(r) for r in rows]}


def _tile(method: str, estimate: EnergyEstimate) -> EstimateTile:
    return EstimateTile(
        method=method,
        order=str(estimate.order),
        E_re=decimal_string(estimate.value.real),
        E_im=decimal_string(estimate.value.imag),
        err_est=optional_decimal(estimate.error_bar, 5),
    )


class SpectraRunner:
    """Main class for evaluating spectral estimators under one run configuration"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.potential = config.build_potential()
        logger.info(f"Initialized SpectraRunner for {self.potential.label} at {config.precision} bits")

    def stationary(self) -> List[StationaryPoint]:
        with working_precision(self.config.precision):
            return stationary_points(self.potential)

    def taylor(self) -> TruncatedSeries:
        with working_precision(self.config.precision):
            x0 = admissible_minimum(self.potential).location
            return taylor_coeffs(self.potential, x0, self.config.J + 2)

    def harmonic(self) -> EstimateTile:
        with working_precision(self.config.precision):
            return _tile("harmonic", harmonic_estimate(self.potential, self.config.v))

    def perturb(self) -> Tuple[PerturbationSeries, EstimateTile]:
        with working_precision(self.config.precision):
            sp, series = perturbative_series(self.potential, self.config.v, self.config.N)
            if series.flagged:
                logger.warning(f"Perturbation series for {self.potential.label} flagged: {series.diagnostics[0]}")
            return series, _tile("perturbative", best_estimate(sp, series))

    def rpm(self) -> LadderReport:
        cfg = self.config
        with working_precision(cfg.precision):
            return run_ladder(self.potential, cfg.D_min, cfg.D_max, cfg.d, cfg.v, cfg.branch,
                              cfg.digits, cfg.precision)

    def profile(self) -> List[ProfileRow]:
        cfg = self.config
        with working_precision(cfg.precision):
            return shifted_profile(self.potential, cfg.build_line(), cfg.s_min, cfg.s_max, cfg.samples, cfg.shift)

    def compare(self) -> CompareBundle:
        """Harmonic, perturbative and RPM estimates side by side"""
        cfg = self.config
        bundle = CompareBundle(model=self.potential.label, v=cfg.v)
        values = {}
        with working_precision(cfg.precision):
            for method, estimate in (("harmonic", self._harmonic_estimate),
                                     ("perturbative", self._perturbative_estimate),
                                     ("rpm", self._rpm_estimate)):
                try:
                    value = estimate()
                except SpectralError as e:
                    logger.error(f"{method} estimate failed for {self.potential.label}: {e.message}")
                    setattr(bundle, method, EstimateTile(method=method, error=f"{type(e).__name__}: {e.message}"))
                    continue
                values[method] = value.value
                setattr(bundle, method, _tile(method, value))
                bundle.reality[method] = decimal_string(abs(value.value.imag), 5)
            names = list(values)
            for i, a in enumerate(names):
                for b in names[i + 1:]:
                    bundle.discrepancies[f"{a}-{b}"] = decimal_string(abs(values[a] - values[b]), 5)
        return bundle

    def _harmonic_estimate(self) -> EnergyEstimate:
        return harmonic_estimate(self.potential, self.config.v)

    def _perturbative_estimate(self) -> EnergyEstimate:
        sp, series = perturbative_series(self.potential, self.config.v, self.config.N)
        return best_estimate(sp, series)

    def _rpm_estimate(self) -> EnergyEstimate:
        report = self.rpm()
        if report.best is None:
            raise SpectralError(f"RPM ladder produced no eigenvalue: {_failure_text(report)}")
        return EnergyEstimate(value=report.best.E, order=report.best.D, error_bar=report.best.error_estimate)

    async def _fan_out(self, fn: Callable[..., Dict[str, Any]], jobs: Sequence[tuple], desc: str) -> List[Any]:
        """Run ``fn`` over ``jobs``; results come back in job order, exceptions in place of failed results"""
        if self.config.jobs == 1 or len(jobs) <= 1:
            results = []
            for args in tqdm(jobs, desc=desc, file=sys.stderr):
                try:
                    results.append(fn(*args))
                except Exception as e:
                    results.append(e)
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
                futures = [loop.run_in_executor(pool, fn, *args) for args in jobs]
                with tqdm(total=len(futures), desc=desc, file=sys.stderr) as bar:
                    for future in futures:
                        future.add_done_callback(lambda _: bar.update(1))
                    results = await asyncio.gather(*futures, return_exceptions=True)
        for args, result in zip(jobs, results):
            if isinstance(result, BaseException):
                logger.error(f"Job {args[:3]} failed: {type(result).__name__}: {result}")
        return list(results)

    async def table1(self) -> ReproReport:
        """Recompute all bundled reference eigenvalues"""
        cfg = self.config
        digits = min(cfg.digits, 20)
        entries = load_table1()
        jobs = [(e.m, e.n, e.R, e.E, cfg.precision, digits, LADDER_D_MAX, cfg.timing) for e in entries]
        logger.info(f"Reproducing {len(jobs)} reference eigenvalues with {cfg.jobs} worker(s)")
        results = await self._fan_out(run_table1_entry, jobs, "table1")

        report = ReproReport(precision=cfg.precision, digits_target=digits)
        for job, result in zip(jobs, results):
            if isinstance(result, BaseException):
                m, n, R = job[:3]
                result = ReproEntry(model=model_label(m, n), m=m, n=n, R=R, target=job[3],
                                    error=f"{type(result).__name__}: {result}").model_dump()
            report.entries.append(ReproEntry(**result))
        report.entries.sort(key=lambda e: (e.m, e.n, Decimal(e.R)))
        report.matched = sum(1 for e in report.entries if (e.matching_digits or 0) >= digits)
        for e in report.entries:
            if e.error:
                report.failures.append(f"{e.model} R={e.R}: {e.error}")
            elif (e.matching_digits or 0) < digits:
                report.failures.append(f"{e.model} R={e.R}: {e.matching_digits} of {digits} digits")
        logger.info(f"Matched {report.matched}/{len(report.entries)} entries to {digits} digits")
        return report

    async def fig2(self, models: Sequence[Tuple[int, int]] = MODELS) -> List[Tuple[CurveSummary, List[Tuple[str, str]]]]:
        """Perturbative error curves of the four integer models at the configured R"""
        cfg = self.config
        jobs = [(m, n, cfg.R, cfg.N_max, cfg.v, cfg.precision) for m, n in sorted(models)]
        results = await self._fan_out(run_fig2_model, jobs, "fig2")
        curves = []
        for job, result in zip(jobs, results):
            if isinstance(result, BaseException):
                summary = CurveSummary(model=model_label(job[0], job[1]), m=job[0], n=job[1], R=job[2],
                                       error=f"{type(result).__name__}: {result}")
                curves.append((summary, []))
                continue
            curves.append((CurveSummary(**result["summary"]), result["rows"]))
        return curves
