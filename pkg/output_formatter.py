"""
Rendering of command results as tables, CSV or JSON

Numbers are always written as decimal strings.
"""

import csv
import io
import json
from decimal import Context, Decimal, InvalidOperation
from typing import Iterable, List, Optional, Sequence

from mpmath import mp, mpf
from pydantic import BaseModel

from models.SolutionRecord import SolutionRecord
from numerics import TruncatedSeries
from perturb import ErrorCurve, PerturbationSeries
from potentials import ProfileRow, StationaryPoint
from rpm import LadderReport, RpmSolution


DIGITS = 25
COMPARE_DIGITS = 20

PROFILE_HEADERS = ("s", "re_u", "im_u")
CURVE_HEADERS = ("n", "log10_rel_err")
STATIONARY_HEADERS = ("k", "re_x0", "im_x0", "re_v2", "im_v2", "admissible")
TAYLOR_HEADERS = ("j", "re_vj", "im_vj")
SERIES_HEADERS = ("j", "re_eps", "im_eps")
LADDER_HEADERS = ("D", "d", "E_re", "E_im", "err_est")

Row = Sequence[str]


def decimal_string(value, digits: int = DIGITS) -> str:
    return mp.nstr(mp.mpf(value), digits)


def optional_decimal(value, digits: int = DIGITS) -> Optional[str]:
    return None if value is None else decimal_string(value, digits)


def matching_digits(computed: str, target: str, limit: int = COMPARE_DIGITS) -> int:
    """Leading significant digits shared by two decimals after rounding both to ``limit`` digits"""
    context = Context(prec=limit)
    try:
        a, b = context.plus(Decimal(computed)), context.plus(Decimal(target))
    except InvalidOperation:
        return 0
    if a.is_zero() or b.is_zero():
        return limit if a == b else 0
    if a.is_signed() != b.is_signed() or a.adjusted() != b.adjusted():
        return 0
    da = a.as_tuple().digits + (0,) * limit
    db = b.as_tuple().digits + (0,) * limit
    count = 0
    for x, y in zip(da[:limit], db[:limit]):
        if x != y:
            break
        count += 1
    return count


def digits_claimed(E, error_estimate) -> Optional[int]:
    """Significant digits supported by an absolute error estimate"""
    if error_estimate is None:
        return None
    scale = max(mpf(1), abs(E))
    if error_estimate == 0:
        return mp.dps
    return max(0, int(mp.floor(-mp.log10(error_estimate / scale))))


def stationary_rows(points: Iterable[StationaryPoint]) -> List[Row]:
    return [(str(p.index), decimal_string(p.location.real), decimal_string(p.location.imag),
             decimal_string(p.second_derivative.real), decimal_string(p.second_derivative.imag),
             "true" if p.admissible else "false") for p in points]


def taylor_rows(series: TruncatedSeries) -> List[Row]:
    return [(str(j), decimal_string(c.real), decimal_string(c.imag)) for j, c in enumerate(series.coeffs)]


def series_rows(series: PerturbationSeries) -> List[Row]:
    return [(str(j), decimal_string(c.real), decimal_string(c.imag)) for j, c in enumerate(series.coeffs)]


def profile_rows(rows: Iterable[ProfileRow]) -> List[Row]:
    return [(decimal_string(r.s), decimal_string(r.value.real), decimal_string(r.value.imag)) for r in rows]


def curve_rows(curve: ErrorCurve) -> List[Row]:
    return [(str(r.n), decimal_string(r.log10_rel_err, 10)) for r in curve.rows]


def ladder_rows(report: LadderReport) -> List[Row]:
    return [(str(s.D), str(s.d), decimal_string(s.E.real), decimal_string(s.E.imag),
             optional_decimal(s.error_estimate, 5) or "") for s in report.solutions]


def solution_record(solution: RpmSolution, model: str, m: Optional[int] = None, n: Optional[int] = None,
                    R: Optional[str] = None) -> SolutionRecord:
    return SolutionRecord(
        model=model,
        m=m,
        n=n,
        R=R,
        variant=solution.variant.value,
        D=solution.D,
        d=solution.d,
        E_re=decimal_string(solution.E.real),
        E_im=decimal_string(solution.E.imag),
        f0_re=optional_decimal(solution.f0.real if solution.f0 is not None else None),
        f0_im=optional_decimal(solution.f0.imag if solution.f0 is not None else None),
        err_est=optional_decimal(solution.error_estimate, 5),
        residual_norm=optional_decimal(solution.residual_norm, 5),
        conditioning=optional_decimal(solution.conditioning, 5),
        digits_claimed=digits_claimed(solution.E, solution.error_estimate),
        precision=solution.precision,
    )


def render_csv(headers: Row, rows: Iterable[Row]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def render_table(headers: Row, rows: Iterable[Row]) -> str:
    rows = [tuple(r) for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)),
             "  ".join("-" * w for w in widths)]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)
    return "\n".join(lines) + "\n"


def render_rows(headers: Row, rows: Iterable[Row], output_format: str) -> str:
    rows = list(rows)
    if output_format == "csv":
        return render_csv(headers, rows)
    if output_format == "json":
        return json.dumps([dict(zip(headers, r)) for r in rows], indent=2) + "\n"
    return render_table(headers, rows)


def render_model(record: BaseModel) -> str:
    return record.model_dump_json(indent=2) + "\n"


def render_models(records: Sequence[BaseModel]) -> str:
    return "[\n" + ",\n".join(r.model_dump_json(indent=2) for r in records) + "\n]\n"


def render_record_table(record: BaseModel) -> str:
    """Two-column key/value table of a record's scalar fields"""
    rows = [(k, "" if v is None else str(v)) for k, v in record.model_dump().items()
            if not isinstance(v, (dict, list))]
    return render_table(("field", "value"), rows)
