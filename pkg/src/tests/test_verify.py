import pytest

from src.errors import DomainError, UsageError
from src.services import verify


def test_fixed_checks_pass_with_no_trials():
    results = verify.run("all", seed=0, trials=0)
    assert [r.suite for r in results] == list(verify.SUITES)
    assert all(r.passed for r in results)
    assert all(r.checks > 0 for r in results)


def test_small_run_passes():
    result = verify.run_suite("jordan", seed=3, trials=2)
    assert result.passed
    assert result.counterexample is None


def test_suite_is_reproducible_alone_and_inside_all():
    alone = verify.run_suite("freudenthal", seed=11, trials=1)
    inside = [r for r in verify.run("all", seed=11, trials=1) if r.suite == "freudenthal"][0]
    assert alone == inside


def test_unknown_suite():
    with pytest.raises(UsageError):
        verify.run_suite("spin", seed=0, trials=1)


def test_trial_scaling():
    checker = verify.Checker("jordan", seed=0, trials=5, tolerance=1e-9)
    assert checker.size(500) == 5
    assert checker.size(20) == 1
    assert verify.Checker("jordan", seed=0, trials=0, tolerance=1e-9).size(500) == 0
    assert verify.Checker("jordan", seed=0, trials=1000, tolerance=1e-9).size(20) == 40


def test_checker_keeps_the_first_counterexample():
    checker = verify.Checker("demo", seed=0, trials=1, tolerance=1e-9)
    checker.equal("one", 1, 1)
    with pytest.raises(verify._Stop):
        checker.equal("two", 2, 3, lambda: "x = 1")
    assert checker.result.checks == 2
    assert checker.result.counterexample == "two: 2 != 3 at x = 1"
    assert not checker.result.passed


def test_checker_reports_library_errors():
    checker = verify.Checker("demo", seed=0, trials=1, tolerance=1e-9)

    def fail():
        raise DomainError("no inverse")

    with pytest.raises(verify._Stop):
        checker.raises_nothing("inverse", fail)
    assert checker.result.counterexample == "inverse: no inverse"


def test_close_uses_the_tolerance():
    checker = verify.Checker("demo", seed=0, trials=1, tolerance=1e-6)
    checker.close("near", 1 + 1e-8, 1)
    with pytest.raises(verify._Stop):
        checker.close("far", 1.1, 1)
