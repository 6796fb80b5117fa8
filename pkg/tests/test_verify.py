import pytest

from athermality import verify


def test_suite_registry_complete():
    assert set(verify.SUITES) == {
        "thm1", "thm2-3", "thm4", "thm5", "thm6", "cc",
        "mutual-info", "properties", "zero-transmission",
    }


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suite_passes_at_reduced_size(name):
    report = verify.run_suite(name, n_trials=15)
    assert report.passed, report.to_text()
    assert report.theorem == name
    assert report.max_violation <= report.tolerance


def test_reports_are_deterministic():
    a = verify.verify_thm1(n_trials=10, seed=5)
    b = verify.verify_thm1(n_trials=10, seed=5)
    assert a.to_text() == b.to_text()
    c = verify.verify_thm1(n_trials=10, seed=6)
    assert a.max_violation != c.max_violation


def test_report_text_layout():
    report = verify.verify_zero_transmission()
    text = report.to_text()
    lines = text.splitlines()
    assert lines[0] == "theorem: zero-transmission"
    assert any(line.startswith("max_violation:") for line in lines)
    assert any(line.startswith("passed:") for line in lines)
    check_lines = [line for line in lines if line.startswith("check ")]
    assert len(check_lines) == len(report.details)
    assert all(" pass " in line or " FAIL " in line for line in check_lines)


def test_passed_matches_tolerance_comparison():
    report = verify.verify_thm4(n_trials=10)
    assert report.passed == (report.max_violation <= report.tolerance)


def test_thm5_records_equality_frequency():
    report = verify.verify_thm5(n_trials=10)
    rows = [d for d in report.details
            if d["check"] == "equality_frequency_recorded"]
    assert len(rows) == 1
    assert rows[0]["above_threshold"] + rows[0]["below_threshold"] == 10


def test_cc_flags_hermitian_extension():
    report = verify.verify_cc(grid=3)
    assert any(d["check"] == "hermitian_extension_flag" for d in report.details)


def test_grid_suites_accept_explicit_grid():
    report = verify.verify_thm6(grid=[0.0, 0.5, 1.0])
    assert report.passed
    assert report.trials == 9


def test_run_suite_unknown_name():
    with pytest.raises(KeyError):
        verify.run_suite("thm99")


def test_run_all_order_and_size():
    reports = verify.run_all(n_trials=8)
    assert [r.theorem for r in reports] == list(verify.SUITES)
    assert all(r.passed for r in reports)
