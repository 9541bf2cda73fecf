"""Unit tests for the Monte Carlo engine and its random streams."""

import logging
import math

import numpy as np
import pytest
from scipy import stats

from swipt_relay.controllers import effective_snr_array
from swipt_relay.exceptions import ArgumentError
from swipt_relay.models import McConfig, Scheme, SystemParams
from swipt_relay.montecarlo import (
    batch_std_err,
    estimate_both,
    estimate_outage,
    sample_gain_arrays,
    sample_gains,
    simulate,
    stream,
)
from swipt_relay.montecarlo.streams import (
    DRAWS_PER_TRIAL,
    exponential_from_uniform,
    gains_from_uniforms,
    sample_uniform_block,
)

logger = logging.getLogger(__name__)


def test_gain_arrays_have_configured_means(params_10db):
    x, y, z, u = sample_gain_arrays(params_10db, stream(1), 400_000)
    assert x.mean() == pytest.approx(1.0, rel=0.01)
    assert y.mean() == pytest.approx(5.0, rel=0.01)
    assert z.mean() == pytest.approx(5.0, rel=0.01)
    assert 0.0 <= u.min() and u.max() < 1.0


def test_gain_arrays_are_exponential(params_10db):
    x, y, _, _ = sample_gain_arrays(params_10db, stream(2), 100_000)
    assert stats.kstest(x, "expon", args=(0.0, 1.0)).pvalue > 1e-3
    assert stats.kstest(y, "expon", args=(0.0, 5.0)).pvalue > 1e-3


def test_sample_gains_single_realization(params_10db):
    g = sample_gains(params_10db, stream(3))
    assert min(g.x, g.y, g.z) >= 0.0
    assert sample_gains(params_10db, stream(3)) == g


def test_exponential_from_uniform_at_zero():
    assert exponential_from_uniform(np.array([0.0]), 2.0)[0] == 0.0


def test_blocks_use_distinct_substreams():
    first = sample_uniform_block(9, 0, 1000)
    second = sample_uniform_block(9, 1, 1000)
    assert first.shape == (DRAWS_PER_TRIAL, 1000)
    assert not np.array_equal(first, second)
    assert np.array_equal(first, sample_uniform_block(9, 0, 1000))


def test_same_seed_same_estimate(params_10db, small_mc):
    first = estimate_both(Scheme.random_ps(), params_10db, small_mc)
    second = estimate_both(Scheme.random_ps(), params_10db, small_mc)
    assert first == second


def test_different_seed_different_estimate(params_10db, small_mc):
    other = McConfig(**{**small_mc.model_dump(), "seed": 8})
    scheme = Scheme.proposed_dpss()
    assert estimate_both(scheme, params_10db, small_mc) != estimate_both(
        scheme, params_10db, other
    )


def test_results_do_not_depend_on_worker_count(scenario):
    points = [scenario.at_snr_db(s) for s in (0.0, 20.0)]
    schemes = [Scheme.proposed_dpss(), Scheme.random_ps()]
    serial = McConfig(trials=50_000, seed=4, workers=1, block_size=10_000)
    parallel = McConfig(trials=50_000, seed=4, workers=3, block_size=10_000)
    assert simulate(schemes, points, serial) == simulate(schemes, points, parallel)


def test_partial_last_block(params_10db):
    """Trial counts that are not a multiple of the block size are honoured."""
    cfg = McConfig(trials=25_001, seed=4, block_size=10_000)
    outage, capacity = estimate_both(Scheme.non_cooperative(), params_10db, cfg)
    assert outage.trials == capacity.trials == 25_001


def test_noncooperative_outage_matches_closed_form(params_10db):
    estimate = estimate_outage(
        Scheme.non_cooperative(), params_10db, McConfig(trials=200_000, seed=21)
    )
    expected = -math.expm1(-params_10db.lambda0 * params_10db.a)
    assert abs(estimate.mean - expected) < 4 * estimate.std_err


def test_outage_estimate_standard_error(params_10db, small_mc):
    estimate = estimate_outage(Scheme.legacy_dpss(), params_10db, small_mc)
    n = small_mc.trials
    assert estimate.std_err == pytest.approx(
        math.sqrt(estimate.mean * (1 - estimate.mean) / n)
    )


def test_outage_zero_at_extreme_snr(small_mc):
    estimate = estimate_outage(Scheme.proposed_dpss(), SystemParams.from_db(200.0), small_mc)
    assert estimate.mean == 0.0
    assert estimate.std_err == 0.0


def test_common_random_numbers_across_schemes(params_10db, small_mc):
    """The proposed scheme never has more outages than a baseline on shared draws."""
    (proposed, legacy, noncoop), = simulate(
        [Scheme.proposed_dpss(), Scheme.legacy_dpss(), Scheme.non_cooperative()],
        [params_10db],
        small_mc,
    )
    assert proposed[0].mean <= legacy[0].mean
    assert proposed[0].mean <= noncoop[0].mean
    assert proposed[1].mean >= noncoop[1].mean


def test_simulate_requires_inputs(params_10db, small_mc):
    with pytest.raises(ArgumentError):
        simulate([], [params_10db], small_mc)
    with pytest.raises(ArgumentError):
        simulate([Scheme.proposed_dpss()], [], small_mc)


def test_batch_std_err_matches_iid_formula():
    samples = np.random.default_rng(6).normal(size=2_000_000)
    expected = samples.std(ddof=1) / math.sqrt(samples.size)
    assert batch_std_err(samples, batches=2000) == pytest.approx(expected, rel=0.06)


def test_batch_std_err_rejects_too_few_batches():
    with pytest.raises(ArgumentError):
        batch_std_err(np.ones(10), batches=1)
    with pytest.raises(ArgumentError):
        batch_std_err(np.ones(10), batches=100)


def test_binomial_std_err_agrees_with_batch_estimate(params_10db):
    """Outage std_err from p(1-p)/n matches the spread of batch means on the same draws."""
    n, seed = 1_000_000, 31
    scheme = Scheme.proposed_dpss()
    estimate = estimate_outage(scheme, params_10db, McConfig(trials=n, seed=seed, block_size=n))

    x, y, z, u = gains_from_uniforms(params_10db, sample_uniform_block(seed, 0, n))
    indicators = effective_snr_array(scheme, params_10db, x, y, z, u) < params_10db.gamma_th
    assert indicators.mean() == pytest.approx(estimate.mean, rel=1e-12)

    batched = batch_std_err(indicators, batches=10_000)
    logger.info(f"Outage {estimate.mean:.5f}: std_err {estimate.std_err:.3e}, batched {batched:.3e}")
    assert batched == pytest.approx(estimate.std_err, rel=0.05)
