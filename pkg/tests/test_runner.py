import asyncio

from mpmath import mp, mpc, mpf

import spectra_runner
from reference_data import load_table1, lookup
from rpm import LadderReport, RpmSolution, Variant
from run_config import RunConfig
from spectra_runner import SpectraRunner, run_table1_entry
from spectral_errors import ConvergenceError


def _reference_ladder(p, **kwargs):
    entry = lookup(p.m, p.n, mp.nstr(p.R, 30))
    E = mpc(mp.mpf(entry.E))
    first = RpmSolution(E=E, D=2, d=0, residual_norm=mpf(0), variant=Variant.GENERAL)
    return LadderReport(solutions=(first, RpmSolution(E=E, D=3, d=0, residual_norm=mpf(0), variant=Variant.GENERAL,
                                                      error_estimate=mpf("1e-30"))))


def test_table1_entries_are_sorted_and_matched(monkeypatch):
    monkeypatch.setattr(spectra_runner, "run_ladder", _reference_ladder)
    report = asyncio.run(SpectraRunner(RunConfig()).table1())
    assert len(report.entries) == 24
    assert [(e.m, e.n, e.R) for e in report.entries] == [(e.m, e.n, e.R) for e in load_table1()]
    assert report.matched == 24
    assert report.failures == []
    assert all(e.runtime_s is None for e in report.entries)
    assert {e.method for e in report.entries if e.n == 1} == {"regularized"}


def test_failed_entry_is_recorded_and_the_run_continues(monkeypatch):
    def flaky(p, **kwargs):
        if p.m == 3 and p.n == 3:
            raise ConvergenceError("singular Jacobian", {"advice": "change d"})
        return _reference_ladder(p, **kwargs)

    monkeypatch.setattr(spectra_runner, "run_ladder", flaky)
    report = asyncio.run(SpectraRunner(RunConfig(digits=18)).table1())
    assert report.digits_target == 18
    assert report.matched == 18
    assert len(report.failures) == 6
    assert all("ConvergenceError" in f and f.startswith("m=3,n=3") for f in report.failures)


def test_empty_ladder_is_a_failure(monkeypatch):
    monkeypatch.setattr(spectra_runner, "run_ladder", lambda p, **kwargs: LadderReport(solutions=()))
    entry = run_table1_entry(1, 1, "2", "-6.0622577482985496524", 256, 20, timing=True)
    assert entry["computed"] is None
    assert entry["error"] == "no rung converged"
    assert entry["runtime_s"] is not None


def test_exact_model_entry_through_the_regularized_ladder():
    entry = run_table1_entry(1, 1, "10", lookup(1, 1, "10").E, 256, 20, D_max=5)
    assert entry["error"] is None
    assert entry["matching_digits"] == 20
    assert entry["method"] == "regularized"


def test_fig2_collects_worker_errors_in_canonical_order(monkeypatch):
    def fake(m, n, R, N_max, v, precision):
        if (m, n) == (1, 3):
            raise RuntimeError("worker died")
        return {"summary": {"model": f"m={m},n={n}", "m": m, "n": n, "R": R, "best_order": 4},
                "rows": [("0", "-1.0"), ("1", "-2.0")]}

    monkeypatch.setattr(spectra_runner, "run_fig2_model", fake)
    curves = asyncio.run(SpectraRunner(RunConfig(R="2")).fig2(models=[(3, 3), (1, 1), (3, 1), (1, 3)]))
    assert [c[0].model for c in curves] == ["m=1,n=1", "m=1,n=3", "m=3,n=1", "m=3,n=3"]
    assert "worker died" in curves[1][0].error
    assert curves[1][1] == []
    assert curves[0][1] == [("0", "-1.0"), ("1", "-2.0")]


def test_compare_for_the_exact_model():
    bundle = SpectraRunner(RunConfig(R="2", N=30, D_min=2, D_max=4)).compare()
    exact = 2 - mp.sqrt(65)
    for tile in (bundle.harmonic, bundle.perturbative, bundle.rpm):
        assert tile.error is None
        assert tile.E_re is not None
    assert abs(mp.mpf(bundle.perturbative.E_re) - exact) < mp.mpf(10) ** -10
    assert abs(mp.mpf(bundle.rpm.E_re) - exact) < mp.mpf(10) ** -18
    assert set(bundle.discrepancies) == {"harmonic-perturbative", "harmonic-rpm", "perturbative-rpm"}
    assert all(mp.mpf(bundle.reality[k]) < mp.mpf(10) ** -50 for k in ("harmonic", "perturbative"))
    assert bundle.perturbative.err_est is not None
