import logging
import os

import pytest

from swipt_relay.experiments.validation import (
    check_capacity,
    check_determinism,
    check_diversity,
    check_outage_agreement,
    check_outage_equivalence,
    check_scheme_ordering,
    validate,
)
from swipt_relay.models import CheckStatus, McConfig, QuadratureSpec, ScenarioParams

logger = logging.getLogger(__name__)

# Mark all tests in this module as integration tests
pytestmark = pytest.mark.integration

ACCEPTANCE_TRIALS = 10_000_000


@pytest.fixture(scope="module")
def reference():
    return ScenarioParams()


@pytest.fixture(scope="module")
def full_mc():
    workers = max(1, min(8, os.cpu_count() or 1))
    return McConfig(trials=ACCEPTANCE_TRIALS, seed=20190101, workers=workers)


@pytest.fixture(scope="module")
def rules():
    return QuadratureSpec()


def _assert_passed(result):
    logger.info(f"{result.name}: {result.status.value} ({result.detail})")
    assert result.status is CheckStatus.PASS, result.detail


def test_exact_outage_agrees_with_simulation(reference, rules, full_mc):
    """Exact outage within 3 standard errors at 5, 10, 15, 20 and 25 dB."""
    _assert_passed(check_outage_agreement(reference, rules, full_mc))


def test_outage_events_are_equivalent(reference, full_mc):
    _assert_passed(check_outage_equivalence(reference, full_mc))


def test_proposed_scheme_has_lowest_outage(reference, full_mc):
    _assert_passed(check_scheme_ordering(reference, full_mc))


def test_diversity_order(reference, rules):
    _assert_passed(check_diversity(reference, rules))


def test_capacity_agrees_with_simulation(reference, rules, full_mc):
    """Chebyshev capacity within 2% of 10^7-trial simulation; proposed highest."""
    _assert_passed(check_capacity(reference, rules, full_mc))


def test_fig1_sweep_is_byte_identical_across_workers(reference, rules, full_mc):
    _assert_passed(check_determinism(reference, rules, full_mc))


def test_corrupted_threshold_fails_full_validation(reference, rules):
    """Negative control: the literal threshold must be caught at acceptance scale."""
    report = validate(
        reference, rules, McConfig(trials=1_000_000, seed=7), corrupt_threshold=True
    )
    assert not report.success
    assert [c.name for c in report.failed] == ["outage_mc_agreement"]
