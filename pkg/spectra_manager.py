#!/usr/bin/env python3
"""
Command-line front end for the spiked-oscillator spectral toolkit

    spectra_manager.py stationary --family sextic --g 100
    spectra_manager.py rpm --family int --m 1 --n 3 --R 2 --format json
    spectra_manager.py table1 --precision 256 --jobs 4 --out table1.json
    spectra_manager.py fig2 --R 2 --N-max 40 --out curves/

Exit codes: 0 when every requested computation met its tolerance, 1 when
some did not (each is listed on standard error), 2 on usage errors.
"""

import argparse
import asyncio
import os
import sys
from typing import List, Optional, Sequence

import aiofiles
from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError

from logging_config import get_logger, setup_logging
from models.tiles.EstimateTile import EstimateTile
from output_formatter import (
    CURVE_HEADERS,
    LADDER_HEADERS,
    PROFILE_HEADERS,
    SERIES_HEADERS,
    STATIONARY_HEADERS,
    TAYLOR_HEADERS,
    ladder_rows,
    profile_rows,
    render_csv,
    render_model,
    render_models,
    render_record_table,
    render_rows,
    series_rows,
    solution_record,
    stationary_rows,
    taylor_rows,
)
from run_config import RunConfig, load_run_config
from spectra_runner import SpectraRunner
from spectral_errors import InvalidInputError, SpectralError

load_dotenv()

logger = get_logger("spectra_manager")

COMMANDS = ("stationary", "taylor", "harmonic", "perturb", "rpm", "compare", "table1", "fig2", "profile")

ESTIMATE_HEADERS = ("method", "order", "E_re", "E_im", "err_est", "error")
REPRO_HEADERS = ("model", "R", "target", "computed", "matching_digits", "err_est", "error")
SUMMARY_HEADERS = ("model", "R", "best_order", "best_log10_rel_err", "oscillation_onset", "oscillates", "error")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _record_rows(records: Sequence[BaseModel], headers: Sequence[str]) -> List[List[str]]:
    return [[_cell(getattr(r, h)) for h in headers] for r in records]


class SpectraManager:
    """Dispatches one subcommand and collects the failures it reports"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.runner = SpectraRunner(config)
        self.failures: List[str] = []

    async def write(self, text: str, path: Optional[str] = None):
        """Write command output to ``path`` (or --out), else to stdout"""
        path = path or self.config.out
        if not path:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        async with aiofiles.open(path, "w") as f:
            await f.write(text)
        logger.info(f"Wrote {path}")

    def _rows(self, headers, rows) -> str:
        return render_rows(headers, rows, self.config.output_format)

    def _record(self, record: BaseModel) -> str:
        if self.config.output_format == "json":
            return render_model(record)
        if self.config.output_format == "csv":
            data = {k: v for k, v in record.model_dump().items() if not isinstance(v, (dict, list))}
            return render_csv(tuple(data), [[_cell(v) for v in data.values()]])
        return render_record_table(record)

    async def stationary(self):
        points = self.runner.stationary()
        if not any(p.admissible for p in points):
            self.failures.append(f"{self.runner.potential.label}: no admissible stationary point")
        await self.write(self._rows(STATIONARY_HEADERS, stationary_rows(points)))

    async def taylor(self):
        await self.write(self._rows(TAYLOR_HEADERS, taylor_rows(self.runner.taylor())))

    async def harmonic(self):
        await self.write(self._record(self.runner.harmonic()))

    async def perturb(self):
        series, best = self.runner.perturb()
        for diagnostic in series.diagnostics:
            self.failures.append(f"{self.runner.potential.label}: {diagnostic}")
        logger.info(f"Optimal truncation at order {best.order}: E={best.E_re} (err {best.err_est})")
        await self.write(self._rows(SERIES_HEADERS, series_rows(series)))

    async def rpm(self):
        report = self.runner.rpm()
        for failure in report.failures:
            logger.debug(f"Ladder failure: {failure}")
        if report.best is None:
            self.failures.append(f"{self.runner.potential.label}: no rung converged")
        elif not report.converged:
            self.failures.append(f"{self.runner.potential.label}: ladder stopped at D={report.best.D} above target")
        if self.config.output_format == "json":
            p = self.runner.potential
            m, n, R = (p.m, p.n, p.parameters()["R"]) if self.config.family == "int" else (None, None, None)
            records = [solution_record(s, p.label, m, n, R) for s in report.solutions]
            await self.write(render_models(records))
            return
        await self.write(self._rows(LADDER_HEADERS, ladder_rows(report)))

    async def compare(self):
        bundle = self.runner.compare()
        tiles: List[EstimateTile] = [t for t in (bundle.harmonic, bundle.perturbative, bundle.rpm) if t is not None]
        self.failures.extend(f"{bundle.model}: {t.method}: {t.error}" for t in tiles if t.error)
        if self.config.output_format == "json":
            await self.write(render_model(bundle))
            return
        await self.write(self._rows(ESTIMATE_HEADERS, _record_rows(tiles, ESTIMATE_HEADERS)))

    async def table1(self):
        report = await self.runner.table1()
        self.failures.extend(report.failures)
        if self.config.output_format == "json":
            await self.write(render_model(report))
            return
        await self.write(self._rows(REPRO_HEADERS, _record_rows(report.entries, REPRO_HEADERS)))

    async def fig2(self):
        """One CSV per model plus a summary; --out names a directory"""
        curves = await self.runner.fig2()
        summaries = [summary for summary, _ in curves]
        for s in summaries:
            if s.error:
                self.failures.append(f"{s.model} R={s.R}: {s.error}")

        if self.config.out:
            for summary, rows in curves:
                if rows:
                    path = os.path.join(self.config.out, f"fig2_m{summary.m}_n{summary.n}.csv")
                    await self.write(render_csv(CURVE_HEADERS, rows), path)
            await self.write(render_models(summaries), os.path.join(self.config.out, "fig2_summary.json"))
            return

        if self.config.output_format == "json":
            await self.write(render_models(summaries))
            return
        parts = []
        for summary, rows in curves:
            parts.append(f"# {summary.model} R={summary.R}\n" + self._rows(CURVE_HEADERS, rows))
        parts.append("# summary\n" + self._rows(SUMMARY_HEADERS, _record_rows(summaries, SUMMARY_HEADERS)))
        await self.write("\n".join(parts))

    async def profile(self):
        await self.write(self._rows(PROFILE_HEADERS, profile_rows(self.runner.profile())))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    model = common.add_argument_group("model")
    model.add_argument("--family", choices=["int", "ab", "sextic"])
    model.add_argument("--m", type=int)
    model.add_argument("--n", type=int)
    model.add_argument("--R")
    model.add_argument("--alpha")
    model.add_argument("--beta")
    model.add_argument("--g")

    run = common.add_argument_group("run")
    run.add_argument("--precision", type=int, help="working precision in bits (default SPECTRA_PRECISION or 256)")
    run.add_argument("--format", dest="output_format", choices=["table", "csv", "json"])
    run.add_argument("--out", help="output file; a directory for fig2")
    run.add_argument("--config", help="key=value config file, overridden by flags")
    run.add_argument("--jobs", type=int, help="worker processes for table1 and fig2")
    run.add_argument("--timing", action="store_const", const=True, help="record runtimes in table1")
    run.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])

    knobs = common.add_argument_group("method")
    knobs.add_argument("--v", type=int, help="oscillator level")
    knobs.add_argument("--N", type=int, help="perturbative order")
    knobs.add_argument("--J", type=int, help="Taylor coefficients beyond V2")
    knobs.add_argument("--D-min", type=int)
    knobs.add_argument("--D-max", type=int)
    knobs.add_argument("--d", type=int, help="Hankel offset")
    knobs.add_argument("--digits", type=int)
    knobs.add_argument("--branch", choices=["+", "-"])
    knobs.add_argument("--N-max", type=int)
    knobs.add_argument("--epsilon")
    knobs.add_argument("--s-min")
    knobs.add_argument("--s-max")
    knobs.add_argument("--samples", type=int)
    knobs.add_argument("--shift", action="store_const", const=True)

    parser = argparse.ArgumentParser(description="Spectra of PT-symmetric spiked oscillators")
    commands = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        commands.add_parser(command, parents=[common])
    return parser


async def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main function for command-line usage"""
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level)
    flags = {k: v for k, v in vars(args).items() if k not in ("command", "config", "log_level")}
    try:
        config = load_run_config(flags, args.config)
        manager = SpectraManager(config)
    except (ValidationError, InvalidInputError, FileNotFoundError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE

    try:
        await getattr(manager, args.command)()
    except SpectralError as e:
        logger.error(f"{args.command} failed: {type(e).__name__}: {e.message}")
        manager.failures.append(f"{args.command}: {type(e).__name__}: {e.message}")

    if manager.failures:
        for failure in manager.failures:
            sys.stderr.write(f"FAILED {failure}\n")
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
