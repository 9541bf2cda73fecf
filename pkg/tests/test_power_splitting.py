"""Unit tests for the per-realization SNR model and PS policies."""

import logging
import math

import numpy as np
import pytest

from swipt_relay.controllers import (
    achievable_rate,
    effective_snr,
    effective_snr_array,
    legacy_rho,
    max_min_snr,
    max_min_snr_array,
    optimal_rho,
    optimal_rho_array,
    optimal_snr_array,
    rate_array,
    snr_components,
)
from swipt_relay.exceptions import ArgumentError, DomainError
from swipt_relay.models import ChannelGains, Scheme, SchemeKind, SystemParams

logger = logging.getLogger(__name__)


@pytest.mark.parametrize(
    "rho,expected",
    [
        (0.0, (20.0, 10.0, 0.0)),
        (1.0, (0.0, 10.0, 30.0)),
        (0.5, (10.0, 10.0, 15.0)),
    ],
)
def test_snr_components(simple_params, gains_123, rho, expected):
    assert snr_components(simple_params, gains_123, rho) == pytest.approx(expected)


@pytest.mark.parametrize("rho", [-0.1, 1.5])
def test_snr_components_rejects_rho_outside_unit_interval(simple_params, gains_123, rho):
    with pytest.raises(DomainError):
        snr_components(simple_params, gains_123, rho)


def test_optimal_rho_direct_branch(simple_params):
    """A weaker source-relay link falls back to direct transmission."""
    decision = optimal_rho(simple_params, ChannelGains(x=2.0, y=1.0, z=4.0))
    assert decision.rho == 0.0
    assert decision.gamma_end == pytest.approx(20.0)
    assert decision.used_relay is False


def test_optimal_rho_relay_branch(simple_params):
    decision = optimal_rho(simple_params, ChannelGains(x=1.0, y=4.0, z=2.0))
    assert decision.rho == pytest.approx(0.375)
    assert decision.gamma_end == pytest.approx(25.0)
    assert decision.used_relay is True


def test_optimal_rho_branch_boundary_is_continuous(simple_params):
    decision = optimal_rho(simple_params, ChannelGains(x=3.0, y=3.0, z=7.0))
    assert decision.rho == 0.0
    assert decision.gamma_end == pytest.approx(30.0)


def test_optimal_rho_zero_gains(simple_params):
    decision = optimal_rho(simple_params, ChannelGains(x=0.0, y=0.0, z=1.0))
    assert (decision.rho, decision.gamma_end, decision.used_relay) == (0.0, 0.0, False)


def test_optimal_rho_maximizes_min_snr_over_grid(simple_params):
    """Grid search over rho agrees with the closed-form optimum."""
    g = ChannelGains(x=1.0, y=4.0, z=2.0)
    best = max(
        min(r, sd + rd)
        for r, sd, rd in (snr_components(simple_params, g, k / 1000) for k in range(1001))
    )
    assert max_min_snr(simple_params, g) == pytest.approx(best, rel=1e-3)
    assert max_min_snr(simple_params, g) >= best - 1e-12


def test_max_min_snr_relay_limited_when_y_below_x(simple_params):
    g = ChannelGains(x=2.0, y=1.0, z=4.0)
    assert max_min_snr(simple_params, g) == pytest.approx(10.0)
    assert optimal_rho(simple_params, g).gamma_end == pytest.approx(20.0)


def test_outage_events_coincide_with_legacy_direct_link():
    """Max-min proposed success equals legacy-with-direct-link success on every draw."""
    p = SystemParams.from_db(10.0)
    rng = np.random.default_rng(11)
    x = rng.exponential(1.0 / p.lambda0, 50_000)
    y = rng.exponential(1.0 / p.lambda1, 50_000)
    z = rng.exponential(1.0 / p.lambda2, 50_000)
    proposed = max_min_snr_array(p, x, y, z) >= p.gamma_th
    legacy = effective_snr_array(Scheme.legacy_dpss_dl(), p, x, y, z) >= p.gamma_th
    assert np.array_equal(proposed, legacy)


def test_direct_fallback_never_below_max_min_form():
    p = SystemParams.from_db(10.0)
    rng = np.random.default_rng(12)
    x, y, z = (rng.exponential(m, 10_000) for m in (1.0, 5.0, 5.0))
    assert np.all(optimal_snr_array(p, x, y, z) >= max_min_snr_array(p, x, y, z))


def test_legacy_rho(simple_params):
    # gamma_th = 3, gamma_in * y = 20
    assert legacy_rho(simple_params, ChannelGains(x=1.0, y=2.0, z=1.0)) == pytest.approx(0.85)
    assert legacy_rho(simple_params, ChannelGains(x=1.0, y=0.1, z=1.0)) == 0.0


def test_effective_snr_noncooperative(simple_params):
    g = ChannelGains(x=2.0, y=5.0, z=5.0)
    assert effective_snr(Scheme.non_cooperative(), simple_params, g) == pytest.approx(20.0)


def test_effective_snr_legacy_below_threshold(simple_params):
    g = ChannelGains(x=1.0, y=0.1, z=1.0)
    assert effective_snr(Scheme.legacy_dpss(), simple_params, g) == 0.0


def test_effective_snr_legacy_with_direct_link(simple_params):
    g = ChannelGains(x=0.5, y=2.0, z=1.0)
    # rho = 0.85: gamma_r = 3, gamma_rd = 0.5 * 0.85 * 10 * 2 * 1 = 8.5
    assert effective_snr(Scheme.legacy_dpss(), simple_params, g) == pytest.approx(3.0)
    assert effective_snr(Scheme.legacy_dpss_dl(), simple_params, g) == pytest.approx(3.0)
    weak = ChannelGains(x=0.1, y=2.0, z=0.1)
    # gamma_rd = 0.85; with the direct link 1.85
    assert effective_snr(Scheme.legacy_dpss(), simple_params, weak) == pytest.approx(0.85)
    assert effective_snr(Scheme.legacy_dpss_dl(), simple_params, weak) == pytest.approx(1.85)


def test_effective_snr_proposed(simple_params):
    g = ChannelGains(x=1.0, y=4.0, z=2.0)
    assert effective_snr(Scheme.proposed_dpss(), simple_params, g) == pytest.approx(25.0)


def test_effective_snr_fixed(simple_params, gains_123):
    assert effective_snr(Scheme.fixed_ps(0.5), simple_params, gains_123) == pytest.approx(10.0)


def test_effective_snr_random_requires_rho(simple_params, gains_123):
    with pytest.raises(ArgumentError):
        effective_snr(Scheme.random_ps(), simple_params, gains_123)
    with pytest.raises(ArgumentError):
        effective_snr(Scheme.proposed_dpss(), simple_params, gains_123, rho_random=0.3)
    value = effective_snr(Scheme.random_ps(), simple_params, gains_123, rho_random=0.5)
    assert value == pytest.approx(10.0)


def test_proposed_dominates_other_schemes_per_realization():
    p = SystemParams.from_db(15.0)
    rng = np.random.default_rng(3)
    for _ in range(500):
        x, y, z = rng.exponential([1.0, 5.0, 5.0])
        g = ChannelGains(x=x, y=y, z=z)
        best = effective_snr(Scheme.proposed_dpss(), p, g)
        for scheme in (Scheme.legacy_dpss_dl(), Scheme.fixed_ps(0.3), Scheme.non_cooperative()):
            assert effective_snr(scheme, p, g) <= best * (1 + 1e-12)


def test_array_forms_match_scalar_forms():
    p = SystemParams.from_db(12.0)
    rng = np.random.default_rng(5)
    x, y, z = (rng.exponential(m, 200) for m in (1.0, 5.0, 5.0))
    u = rng.uniform(size=200)
    schemes = [
        Scheme.proposed_dpss(),
        Scheme.legacy_dpss(),
        Scheme.legacy_dpss_dl(),
        Scheme.non_cooperative(),
        Scheme.fixed_ps(0.25),
        Scheme.random_ps(),
    ]
    for s in schemes:
        values = effective_snr_array(s, p, x, y, z, u)
        for i in range(0, 200, 17):
            g = ChannelGains(x=x[i], y=y[i], z=z[i])
            rho_random = float(u[i]) if s.kind is SchemeKind.RANDOM else None
            assert values[i] == pytest.approx(effective_snr(s, p, g, rho_random), rel=1e-12)

    rho = optimal_rho_array(p, x, y, z)
    for i in range(0, 200, 23):
        g = ChannelGains(x=x[i], y=y[i], z=z[i])
        assert rho[i] == pytest.approx(optimal_rho(p, g).rho, abs=1e-14)


def test_effective_snr_array_random_requires_factors():
    p = SystemParams.from_db(10.0)
    ones = np.ones(3)
    with pytest.raises(ArgumentError):
        effective_snr_array(Scheme.random_ps(), p, ones, ones, ones)


@pytest.mark.parametrize(
    "gamma,rate",
    [(0.0, 0.0), (3.0, 1.0), (25.0, 0.5 * math.log2(26.0))],
)
def test_achievable_rate(gamma, rate):
    assert achievable_rate(gamma) == pytest.approx(rate, abs=1e-15)
    assert float(rate_array(np.array([gamma]))[0]) == pytest.approx(rate, abs=1e-15)


def test_achievable_rate_rejects_negative_snr():
    with pytest.raises(DomainError):
        achievable_rate(-1.0)
