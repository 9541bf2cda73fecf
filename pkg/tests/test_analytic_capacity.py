"""Unit tests for the ergodic capacity evaluators."""

import logging
import math

import pytest
from scipy import special

from swipt_relay.analytic import (
    capacity_c1,
    capacity_c1_exact,
    capacity_c2,
    capacity_c2_exact,
    ergodic_capacity,
    noncooperative_capacity,
)
from swipt_relay.models import EvalMode, McConfig, QuadratureSpec, Scheme, SystemParams
from swipt_relay.montecarlo import estimate_capacity

logger = logging.getLogger(__name__)


def _c1_closed_form(p: SystemParams) -> float:
    """E[rate 1{y < x}] integrated in x directly."""
    total_rate = p.lambda0 + p.lambda1

    def scaled(s):
        return math.exp(s) * special.exp1(s)

    return (
        scaled(p.lambda0 / p.gamma_in)
        - p.lambda0 / total_rate * scaled(total_rate / p.gamma_in)
    ) / (2.0 * math.log(2.0))


@pytest.mark.parametrize("snr_db", [0.0, 15.0, 30.0])
def test_c1_matches_closed_form(scenario, snr_db):
    p = scenario.at_snr_db(snr_db)
    assert capacity_c1(p) == pytest.approx(_c1_closed_form(p), rel=1e-2)


def test_c1_matches_two_dimensional_quadrature(scenario):
    p = scenario.at_snr_db(15.0)
    assert capacity_c1(p) == pytest.approx(capacity_c1_exact(p), rel=1e-2)
    assert capacity_c1_exact(p) == pytest.approx(_c1_closed_form(p), rel=1e-5)


def test_c1_covers_direct_link_when_relay_link_is_weak():
    """A very weak source-relay link leaves only direct transmission."""
    p = SystemParams.from_db(15.0, lambda1=50.0)
    assert capacity_c1_exact(p) == pytest.approx(noncooperative_capacity(p), rel=5e-3)


@pytest.mark.parametrize(
    "func", [capacity_c1, capacity_c2, ergodic_capacity, noncooperative_capacity]
)
def test_capacity_vanishes_at_low_snr(func):
    p = SystemParams.from_db(-90.0)
    assert 0.0 <= func(p) < 1e-6


def test_c2_matches_adaptive_quadrature(scenario):
    p = scenario.at_snr_db(15.0)
    chebyshev = capacity_c2(p)
    adaptive = capacity_c2_exact(p)
    logger.info(f"C2 at 15 dB: Chebyshev {chebyshev:.6f}, adaptive {adaptive:.6f}")
    assert chebyshev == pytest.approx(adaptive, rel=1e-2)


def test_c2_converges_with_more_nodes(scenario):
    p = scenario.at_snr_db(15.0)
    reference = capacity_c2_exact(p)
    coarse = abs(capacity_c2(p, QuadratureSpec()) - reference)
    fine = abs(capacity_c2(p, QuadratureSpec().scaled(4)) - reference)
    assert fine < coarse


def test_ergodic_capacity_matches_simulation(scenario):
    p = scenario.at_snr_db(15.0)
    simulated = estimate_capacity(Scheme.proposed_dpss(), p, McConfig(trials=300_000, seed=5))
    analytic = ergodic_capacity(p)
    logger.info(f"Capacity {analytic:.5f} vs MC {simulated.mean:.5f} +- {simulated.std_err:.1e}")
    assert analytic == pytest.approx(simulated.mean, rel=0.02)


def test_exact_mode_sums_adaptive_terms(scenario):
    p = scenario.at_snr_db(10.0)
    expected = capacity_c1_exact(p) + capacity_c2_exact(p)
    assert ergodic_capacity(p, mode=EvalMode.EXACT) == pytest.approx(expected, rel=1e-12)


def test_proposed_capacity_exceeds_direct_link(scenario):
    for snr_db in range(0, 45, 5):
        p = scenario.at_snr_db(snr_db)
        assert ergodic_capacity(p) > noncooperative_capacity(p)


def test_capacity_grows_with_snr(scenario):
    values = [ergodic_capacity(scenario.at_snr_db(s)) for s in range(0, 45, 5)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_noncooperative_capacity_closed_form(params_10db):
    s = params_10db.lambda0 / params_10db.gamma_in
    expected = math.exp(s) * special.exp1(s) / (2.0 * math.log(2.0))
    assert noncooperative_capacity(params_10db) == pytest.approx(expected, rel=1e-10)
