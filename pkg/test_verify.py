import logging

import pytest

from partition import Partition
from verify import (MAX_REPORTED_FAILURES, SUITES, SuiteResult, VerifyConfig, erdos_gallai_oracle,
                    hook_characterization_exhaustive, littlewood_check, run_all, run_suite, schur_polynomial)

# Configure logging
logging.basicConfig(
    level=logging.DEBUG,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

SMALL = dict(max_n=4, star_max_n=5, littlewood_max_n=4, tableau_max_cells=6, tableau_max_entry=4,
             crystal_max_letter=4, graphic_max_length=4, graphic_max_entry=3)


def test_schur_polynomial():
    """Monomial expansions of small Schur polynomials."""
    assert schur_polynomial(Partition((1,)), 2) == {(1, 0): 1, (0, 1): 1}, "s_1(x1,x2)"
    assert schur_polynomial(Partition((2, 1)), 2) == {(2, 1): 1, (1, 2): 1}, "s_21(x1,x2)"
    assert schur_polynomial(Partition(), 3) == {(0, 0, 0): 1}, "s_empty = 1"
    assert sum(schur_polynomial(Partition((2, 1)), 3).values()) == 8, "s_21(1,1,1) = 8"
    with pytest.raises(ValueError):
        schur_polynomial(Partition((1,)), 0)


def test_littlewood():
    """Degree sequences of all graphs match the threshold Schur sum."""
    logger.info("Testing the Littlewood identity...")
    for n in range(1, 5):
        assert littlewood_check(n), f"identity fails for n={n}"
    with pytest.raises(ValueError):
        littlewood_check(7)
    logger.info("Littlewood test passed")


def test_hook_characterization_report():
    """Graph counts and counterexamples of the exhaustive comparison."""
    report = hook_characterization_exhaustive(4)
    assert report.graphs == 64 and report.ok, f"n=4: {report.graphs} graphs, {report.counterexamples}"
    assert hook_characterization_exhaustive(1).graphs == 1, "one graph on one vertex"
    assert hook_characterization_exhaustive(0).graphs == 1, "the empty graph"
    accept_all = hook_characterization_exhaustive(4, pv_test=lambda a: True)
    assert not accept_all.ok, "accepting everything must produce counterexamples"
    with pytest.raises(ValueError, match="capped"):
        hook_characterization_exhaustive(8)


def test_erdos_gallai_oracle():
    """Erdos-Gallai on hand-checked sequences."""
    assert erdos_gallai_oracle((3, 2, 2, 1)), "(3,2,2,1)"
    assert not erdos_gallai_oracle((3, 3)), "(3,3)"
    assert not erdos_gallai_oracle((1,)), "odd sum"
    assert erdos_gallai_oracle((0, 0)), "zeros"
    assert not erdos_gallai_oracle((3, 3, 1, 1)), "(3,3,1,1) fails at k = 2"
    with pytest.raises(ValueError):
        erdos_gallai_oracle((1, -1))


def test_config_validation():
    """Out-of-range settings are rejected up front."""
    with pytest.raises(ValueError, match="max_n"):
        VerifyConfig(max_n=0)
    with pytest.raises(ValueError, match="max_n"):
        VerifyConfig(max_n=8)
    with pytest.raises(ValueError, match="mutation"):
        VerifyConfig(mutation="bogus")
    with pytest.raises(ValueError, match="workers"):
        VerifyConfig(workers=0)
    assert VerifyConfig().validate and not VerifyConfig(fast=True).validate, "fast mode skips validation"


def test_suite_result():
    """Failures are counted in full but only the first few are kept."""
    result = SuiteResult("demo")
    for k in range(MAX_REPORTED_FAILURES + 5):
        result.check(False, f"failure {k}")
    result.check(True, "fine")
    assert result.checked == MAX_REPORTED_FAILURES + 6, "every check counted"
    assert result.failure_count == MAX_REPORTED_FAILURES + 5, "every failure counted"
    assert len(result.failures) == MAX_REPORTED_FAILURES, "reported failures capped"
    batch = SuiteResult("batch")
    batch.add(64, ["one"])
    assert batch.checked == 64 and batch.failures == ["one"] and not batch.ok, "batched checks"
    assert "seconds" not in batch.to_json() and "seconds" in batch.to_json(timings=True), "timings opt-in"


def test_run_all_small():
    """Every suite passes on a small configuration."""
    logger.info("Running every suite on a small configuration...")
    report = run_all(VerifyConfig(**SMALL))
    failing = {s.name: s.failures for s in report.suites if not s.ok}
    assert report.ok, f"failing suites: {failing}"
    assert [s.name for s in report.suites] == list(SUITES), "suites run in declaration order"
    assert all(s.checked > 0 for s in report.suites), "every suite checks something"
    payload = report.to_json()
    assert payload["ok"] and payload["config"]["max_n"] == 4, "report payload"
    logger.info("Small configuration test passed")


def test_mutations_are_detected():
    """Dropping either half of the PV test breaks the hook characterization."""
    for mutation in ("no-peak", "no-valley"):
        result = run_suite("hook-characterization", VerifyConfig(max_n=5, mutation=mutation))
        assert not result.ok, f"mutation {mutation} went unnoticed"


def test_parallel_order():
    """Worker threads do not change the order of results."""
    names = ["star-graphs", "burge-examples", "graph-round-trip", "i-pairs"]
    report = run_all(VerifyConfig(max_n=4, star_max_n=4, workers=2), names)
    assert [s.name for s in report.suites] == names, "results keep the requested order"
    assert report.ok, "small suites pass"
    with pytest.raises(ValueError, match="unknown suite"):
        run_all(VerifyConfig(), ["nope"])


if __name__ == "__main__":
    try:
        logger.info("Starting verification harness tests...")
        test_schur_polynomial()
        test_littlewood()
        test_hook_characterization_report()
        test_erdos_gallai_oracle()
        test_config_validation()
        test_suite_result()
        test_run_all_small()
        test_mutations_are_detected()
        test_parallel_order()
        logger.info("All tests completed successfully")
    except Exception as e:
        logger.error(f"Test failed: {str(e)}")
        raise
