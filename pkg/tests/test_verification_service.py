"""
Tests for the suite runner.
"""
import pytest

from qappell.application.services.verification_service import Suite
from qappell.domain.exceptions.domain_exceptions import UnsupportedParameterException
from qappell.domain.models.grid_spec import GridSpec, SuiteRequirements

SUITES = ["qcore", "leibniz", "derivatives", "characterization", "asequence", "addition",
          "operators", "genfun", "mehler", "rogers", "setalgebra"]


@pytest.fixture
def grid() -> GridSpec:
    return GridSpec.from_points([("1/2", "1/3"), ("2", "2"), ("1", "1"), ("2/3", "0")])


def test_suite_names(verification_service):
    assert verification_service.suite_names == SUITES


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_passes_on_a_small_grid(verification_service, small_settings, grid, suite):
    report = verification_service.run([suite], grid, small_settings)
    failures = [r for s in report["suites"] for r in s["reports"] if not r["pass"]]
    assert report["pass"], failures
    assert report["suites"][0]["reports"]


def test_exclusions_are_listed(verification_service, small_settings, grid):
    report = verification_service.run(["mehler"], grid, small_settings)
    excluded = report["suites"][0]["excluded_points"]
    assert excluded == [
        {"q": "1", "u": "1", "reason": "q = 1"},
        {"q": "2/3", "u": "0", "reason": "u = 0"},
    ]


def test_reports_carry_anchor_and_parameters(verification_service, small_settings, grid):
    report = verification_service.run(["derivatives"], grid, small_settings)
    suite = report["suites"][0]
    assert suite["suite"] == "derivatives"
    assert suite["anchor"].startswith("D_{q,x} P_n(x,y;u)")
    first = suite["reports"][0]
    assert set(first) == {"identity", "anchor", "params", "order", "pass", "first_failure", "notes", "discrepancies"}
    assert first["params"] == {"q": "1/2", "u": "1/3"}


def test_all_expands_to_every_suite(verification_service, small_settings):
    grid = GridSpec.from_points([("1/2", "1/2")])
    report = verification_service.run(["all"], grid, small_settings)
    assert [s["suite"] for s in report["suites"]] == SUITES
    assert report["pass"]


def test_unknown_suite(verification_service, small_settings, grid):
    with pytest.raises(ValueError):
        verification_service.run(["nope"], grid, small_settings)


def _raising_suite(error: Exception) -> Suite:
    def run(ctx, settings):
        raise error
    return Suite("broken", "never holds", SuiteRequirements(), run)


@pytest.mark.parametrize("error, name", [
    (UnsupportedParameterException("no such q"), "UnsupportedParameterException"),
    (ZeroDivisionError("division by zero"), "ZeroDivisionError"),
])
def test_errors_become_failed_reports(verification_service, small_settings, error, name):
    verification_service.suites["broken"] = _raising_suite(error)
    grid = GridSpec.from_points([("1/2", "1/3"), ("2", "2")])
    report = verification_service.run(["broken"], grid, small_settings)
    assert report["pass"] is False
    reports = report["suites"][0]["reports"]
    assert [r["params"] for r in reports] == [{"q": "1/2", "u": "1/3"}, {"q": "2", "u": "2"}]
    assert all(r["notes"][0].startswith(f"error: {name}") for r in reports)


@pytest.mark.parametrize("suite", ["qcore", "leibniz"])
def test_kernel_suites_hold_at_q_minus_one(verification_service, small_settings, suite):
    grid = GridSpec.from_points([("-1", "1"), ("-1", "1/2")])
    report = verification_service.run([suite], grid, small_settings)
    failures = [r for r in report["suites"][0]["reports"] if not r["pass"]]
    assert report["pass"], failures
    assert report["suites"][0]["excluded_points"] == []


def test_series_suites_exclude_q_minus_one(verification_service, small_settings):
    grid = GridSpec.from_points([("-1", "1"), ("1/2", "1/3")])
    report = verification_service.run(["derivatives", "addition"], grid, small_settings)
    assert report["pass"]
    for suite in report["suites"]:
        assert suite["excluded_points"] == [{"q": "-1", "u": "1", "reason": "q = -1"}]


@pytest.mark.parametrize("suite", ["characterization", "addition", "operators", "genfun"])
def test_classical_limit_stays_in_the_sweep(verification_service, small_settings, suite):
    grid = GridSpec.from_points([("1", "1"), ("1", "1/2"), ("1", "0")])
    report = verification_service.run([suite], grid, small_settings)
    result = report["suites"][0]
    assert result["excluded_points"] == []
    assert report["pass"], [r for r in result["reports"] if not r["pass"]]
    assert {r["params"]["u"] for r in result["reports"]} == {"1", "1/2", "0"}


def test_genfun_skips_only_the_shift_laws_at_q_one(verification_service, small_settings):
    grid = GridSpec.from_points([("1", "1/2"), ("1/2", "1/2")])
    reports = verification_service.run(["genfun"], grid, small_settings)["suites"][0]["reports"]
    at_one = [r["identity"] for r in reports if r["params"]["q"] == "1"]
    elsewhere = [r["identity"] for r in reports if r["params"]["q"] == "1/2"]
    assert "q_exponential_shift" not in at_one
    assert not any(name.startswith("quasi_weighted") for name in at_one)
    assert "q_exponential_shift" in elsewhere
    assert any(name.startswith("quasi_generating_function") for name in at_one)
