# Python Standard Libraries
import sys
# Third-Party Libraries
import pytest
# Custom Libraries
import conformal_domains.reporter


@pytest.fixture
def reporter():
    reporter = conformal_domains.reporter.Reporter()
    reporter.start()
    return reporter


def test_new_reporter_succeeds(reporter):
    assert reporter.state() == "success"
    assert reporter.worst_residual is None
    assert reporter.assertions == 0


def test_assert_within_tracks_the_worst_ratio(reporter):
    reporter.assert_within(1e-12, 1e-9, "small")
    reporter.assert_within(5e-7, 1e-6, "half the bound")
    reporter.assert_within(1e-3, 1.0, "tiny ratio")
    assert reporter.state() == "success"
    assert reporter.assertions == 3
    assert reporter.worst_residual == 5e-7
    assert reporter.worst_bound == 1e-6


def test_assert_within_fails_above_the_bound(reporter):
    reporter.assert_within(2.0, 1.0, "too large")
    assert reporter.state() == "failure"
    record = reporter.report_records()[0]
    assert record.result == "failure"
    assert record.residual == 2.0
    assert record.bound == 1.0
    assert record.message.startswith("too large: residual 2.000e+00 exceeds bound 1.000e+00")


def test_non_finite_residuals_fail(reporter):
    reporter.assert_within(float("nan"), 1.0, "nan")
    assert reporter.state() == "failure"
    assert reporter.worst_ratio == float("inf")


def test_zero_bound_allows_only_zero(reporter):
    reporter.assert_within(0.0, 0.0, "exact")
    assert reporter.state() == "success"
    reporter.assert_within(1e-300, 0.0, "not exact")
    assert reporter.state() == "failure"


def test_state_priorities(reporter):
    reporter.skip("skipped")
    assert reporter.state() == "skipped"
    reporter.warn("warned")
    assert reporter.state() == "warning"
    reporter.fail("failed")
    assert reporter.state() == "failure"
    try:
        raise RuntimeError("broken check")
    except RuntimeError:
        reporter.exception(sys.exc_info())
    assert reporter.state() == "error"
    assert [record.result for record in reporter.report_records()] == ["error", "failure", "warning", "skipped"]


def test_report_records_are_summarized(reporter):
    for index in range(30):
        reporter.fail("failure {}".format(index))
    records = reporter.report_records(max_records=5)
    assert len(records) == 5
    assert records[-1].result == "warning"
    assert records[-1].message == "Suppressed 26 failure messages"


def test_complete_requires_start():
    with pytest.raises(Exception):
        conformal_domains.reporter.Reporter().complete()
