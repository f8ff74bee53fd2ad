import pytest

from sigma_lab import (
    PrecisionPolicy,
    Verdict,
    check_cor1_thresholds,
    check_eqffff,
    check_external_facts,
    check_F3x,
    check_gn_and_F,
    check_lemma1,
    check_robbins,
    check_sn,
    check_y_threshold,
    enumerate_changepoints,
    geometric_grid,
    run_suite,
)


def test_robbins_small_range():
    report = check_robbins(1, 200)
    assert report.verdict is Verdict.PASS
    assert report.params == {"n_lo": "1", "n_hi": "200"}
    assert report.witness_value("scriptL(n) < T_n/n") == "held at 200/200 points"


def test_lemma1():
    report = check_lemma1()
    assert report.verdict is Verdict.PASS
    # the inner rescaled estimate degenerates to exactly zero at x = 1/2
    assert report.witness_value("a_p(1/2)") == "[0, 0]"


def test_cor1_thresholds():
    report = check_cor1_thresholds()
    assert report.verdict is Verdict.PASS
    d_above = report.witness_value("D(3.92465)")
    d_below = report.witness_value("D(3.92466)")
    assert d_above.startswith("[1.000000")
    assert d_below.startswith("[0.999999")


def test_gn_and_growth():
    report = check_gn_and_F()
    assert report.verdict is Verdict.PASS
    close = float(report.witness_value("H' formula max rel deviation from finite difference"))
    off = float(report.witness_value("H' variant without ln(pi) factor, max rel deviation"))
    # the implemented derivative matches the difference quotient; the variant
    # that drops the ln(pi) factor misses by percent-level amounts.
    assert close < 1e-6
    assert off > 1e-3


def test_y_threshold():
    report = check_y_threshold()
    assert report.verdict is Verdict.PASS


def test_f3x_default_and_custom_grid():
    assert check_F3x().verdict is Verdict.PASS
    assert check_F3x(grid=[216, 1000, 10**6]).verdict is Verdict.PASS


def test_external_facts():
    assert check_external_facts().verdict is Verdict.PASS


def test_sn_report_is_data_only():
    report = check_sn(1, 200)
    assert report.verdict is Verdict.PASS
    assert report.witness_value("S_n < 1 + 1/(2n) held") == "200/200"
    assert report.witness_value("a(1)").startswith("[0.125949199700071589")


def test_eqffff_reports_both_readings():
    records = enumerate_changepoints(4000)
    report = check_eqffff(records)
    assert report.verdict is Verdict.PASS
    # the unit-centred window is evaluated as data and observed to fail
    flags = [v for k, v in report.witnesses if "within unit window" in k]
    assert flags and all(flag == "False" for flag in flags)
    empty = check_eqffff(records[:1])
    assert empty.verdict is Verdict.PASS


def test_higher_precision_never_flips_pass(tmp_record=None):
    a = check_y_threshold(PrecisionPolicy(initial_bits=128, max_bits=8192))
    b = check_y_threshold(PrecisionPolicy(initial_bits=512, max_bits=8192))
    assert a.verdict is b.verdict is Verdict.PASS


def test_undecided_at_cap_and_resolution():
    # The D crossing sits about 3e-7 from 1, far beyond an 8-bit budget;
    # the check must say UNDECIDED, never guess, and resolve to the same
    # PASS it would always have reached once precision is allowed to grow.
    starved = check_cor1_thresholds(PrecisionPolicy(initial_bits=8, max_bits=8))
    assert starved.verdict is Verdict.UNDECIDED
    assert any("UNDECIDED" in value for _, value in starved.witnesses)
    resolved = check_cor1_thresholds(PrecisionPolicy(initial_bits=8, max_bits=1024))
    assert resolved.verdict is Verdict.PASS


def test_fail_requires_certified_counterexample():
    # Outside its stated range the growth comparison genuinely reverses:
    # at x = 100, F(3x) exceeds ln(2x) QL(x), and the report must carry the
    # certified opposite rather than an inconclusive verdict.
    report = check_F3x(grid=[100])
    assert report.verdict is Verdict.FAIL
    assert any("certified opposite" in value for _, value in report.witnesses)
    # the counter-inequality stays certified at any higher precision
    again = check_F3x(grid=[100], policy=PrecisionPolicy(initial_bits=512, max_bits=8192))
    assert again.verdict is Verdict.FAIL


def test_run_suite_single_and_unknown():
    reports = run_suite("threshold")
    assert len(reports) == 1 and reports[0].check_id == "threshold"
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_run_suite_all_default_sizes():
    reports = run_suite("all")
    assert [r.check_id for r in reports] == [
        "robbins",
        "lemma1",
        "cor1",
        "gn",
        "threshold",
        "f3x",
        "ffff",
        "external",
        "sn",
    ]
    assert all(r.verdict is Verdict.PASS for r in reports)


def test_geometric_grid():
    pts = geometric_grid(1.0, 10.0, per_decade=8)
    assert pts[0] == 1.0 and pts[-1] == 10.0
    assert all(b > a for a, b in zip(pts, pts[1:]))
    assert 9 <= len(pts) <= 10
    with pytest.raises(ValueError):
        geometric_grid(0.0, 5.0)
