import pytest

from ramanujan_psi.config import Settings
from ramanujan_psi.series import SeriesError
from ramanujan_psi.series.checks import SUITES, CheckResult, run_suite


@pytest.fixture(scope="module")
def results():
    return run_suite("all", Settings())


def test_all_suites_pass(results):
    failed = [(result.name, result.input, result.residual) for result in results if not result.passed]
    assert failed == []


def test_suite_order(results):
    names = [result.name for result in results]
    assert names[0] == "csch2_identity"
    assert names[-1] == "asymptotic_growth"
    assert names.index("psi_vs_oracle") < names.index("coefficient_identity")


def test_deterministic(results):
    again = run_suite("asymptotic", Settings())
    assert again == [result for result in results if result.name in
                     ("coefficient_identity", "scaled_asymptotic_residual", "asymptotic_growth")]


@pytest.mark.parametrize("suite", SUITES)
def test_single_suite(suite):
    assert run_suite(suite, Settings())


def test_unknown_suite():
    with pytest.raises(SeriesError):
        run_suite("everything", Settings())


def test_passed_uses_magnitude():
    assert CheckResult("c", 1, -1e-14, 1e-13).passed
    assert not CheckResult("c", 1, 2e-13, 1e-13).passed


def test_coefficient_checks_present(results):
    names = {result.name for result in results}
    assert {"lambert_expansion", "csch2_expansion", "psi_prime_maclaurin", "even_coefficient",
            "maclaurin_slope", "one_minus_gamma_thirteen_places"} <= names
