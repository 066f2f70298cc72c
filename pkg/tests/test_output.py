import json

from mpmath import mp, mpc, mpf

from output_formatter import (
    CURVE_HEADERS,
    STATIONARY_HEADERS,
    decimal_string,
    digits_claimed,
    ladder_rows,
    matching_digits,
    render_csv,
    render_rows,
    render_table,
    solution_record,
    stationary_rows,
)
from potentials import ShiftedSextic, stationary_points
from rpm import LadderReport, RpmSolution, Variant


def test_matching_digits_counts_leading_agreement():
    target = "-198.00249998437519531"
    assert matching_digits(target, target) == 20
    assert matching_digits("-198.00249998437519000", target) == 17
    assert matching_digits("198.00249998437519531", target) == 0
    assert matching_digits("1.0", "10") == 0
    assert matching_digits("0.8488033663331020538061234", "0.848803366333102053806") == 20
    assert matching_digits("not a number", target) == 0


def test_digits_claimed_from_error_estimate():
    assert digits_claimed(mpf(-198), mpf("1e-22")) == 24
    assert digits_claimed(mpf("0.5"), mpf("3e-11")) == 10
    assert digits_claimed(mpf(1), None) is None


def test_decimal_strings():
    assert decimal_string(mpf("0.5")) == "0.5"
    assert decimal_string(mpf(-6)) == "-6.0"


def test_csv_json_and_table_rendering():
    rows = [("0", "-1.5"), ("1", "-3.25")]
    assert render_csv(CURVE_HEADERS, rows) == "n,log10_rel_err\n0,-1.5\n1,-3.25\n"
    assert json.loads(render_rows(CURVE_HEADERS, rows, "json")) == [
        {"n": "0", "log10_rel_err": "-1.5"}, {"n": "1", "log10_rel_err": "-3.25"}]
    table = render_table(CURVE_HEADERS, rows).splitlines()
    assert table[0].split() == ["n", "log10_rel_err"]
    assert len(table) == 4


def test_stationary_rows_of_the_sextic_member():
    rows = stationary_rows(stationary_points(ShiftedSextic(100)))
    assert len(rows) == 8
    assert all(len(r) == len(STATIONARY_HEADERS) for r in rows)
    assert [r[-1] for r in rows].count("true") == 1


def test_ladder_rows_and_solution_records():
    first = RpmSolution(E=mpc(-6, 0), D=2, d=0, residual_norm=mpf(0), variant=Variant.GENERAL, f0=mpc(0, -1))
    second = first.with_error_estimate(mpf("1e-21"))
    report = LadderReport(solutions=(first, second))
    rows = ladder_rows(report)
    assert rows[0][-1] == ""
    assert rows[1][:4] == ("2", "0", "-6.0", "0.0")
    record = solution_record(second, "int(m=1, n=1, R=2)", 1, 1, "2")
    assert record.variant == "general"
    assert record.f0_im == "-1.0"
    assert record.digits_claimed == 21
    assert mp.mpf(record.err_est) == mp.mpf("1e-21")
