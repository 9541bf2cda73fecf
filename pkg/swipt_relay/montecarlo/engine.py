"""Monte Carlo estimation of outage probability and ergodic capacity.

Trials are split into fixed-size blocks (``McConfig.block_size``). Each block
draws its uniforms from its own counter-based substream and reduces them to
per-(SNR point, scheme) sums; block sums are combined with ``math.fsum`` in
block order. The worker count therefore only changes who computes a block,
never the result.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from swipt_relay.controllers.power_splitting import effective_snr_array, rate_array
from swipt_relay.exceptions import ArgumentError
from swipt_relay.models.montecarlo import McConfig, McEstimate
from swipt_relay.models.system import Scheme, SystemParams

from .streams import gains_from_uniforms, sample_uniform_block

logger = logging.getLogger(__name__)

# per block and (point, scheme): outage count, rate sum, rate sum of squares
_N_SUMS = 3

EstimatePair = Tuple[McEstimate, McEstimate]


@dataclass(frozen=True)
class _BlockTask:
    seed: int
    block_index: int
    size: int
    schemes: Tuple[Scheme, ...]
    params: Tuple[SystemParams, ...]


def _run_block(task: _BlockTask) -> np.ndarray:
    uniforms = sample_uniform_block(task.seed, task.block_index, task.size)
    sums = np.empty((len(task.params), len(task.schemes), _N_SUMS))
    for i, p in enumerate(task.params):
        x, y, z, u = gains_from_uniforms(p, uniforms)
        for j, scheme in enumerate(task.schemes):
            snr = effective_snr_array(scheme, p, x, y, z, u)
            rate = rate_array(snr)
            sums[i, j, 0] = np.count_nonzero(snr < p.gamma_th)
            sums[i, j, 1] = np.sum(rate)
            sums[i, j, 2] = np.sum(rate * rate)
    return sums


def _block_tasks(
    schemes: Sequence[Scheme], params: Sequence[SystemParams], cfg: McConfig
) -> List[_BlockTask]:
    n_blocks = -(-cfg.trials // cfg.block_size)
    tasks = []
    for index in range(n_blocks):
        size = min(cfg.block_size, cfg.trials - index * cfg.block_size)
        tasks.append(_BlockTask(cfg.seed, index, size, tuple(schemes), tuple(params)))
    return tasks


def _outage_estimate(count: float, n: int) -> McEstimate:
    mean = count / n
    return McEstimate(mean=mean, std_err=math.sqrt(mean * (1.0 - mean) / n), trials=n)


def _mean_estimate(total: float, total_sq: float, n: int) -> McEstimate:
    mean = total / n
    if n > 1:
        variance = max(total_sq - n * mean * mean, 0.0) / (n - 1)
        std_err = math.sqrt(variance / n)
    else:
        std_err = 0.0
    return McEstimate(mean=mean, std_err=std_err, trials=n)


def simulate(
    schemes: Sequence[Scheme], params: Sequence[SystemParams], cfg: McConfig
) -> List[List[EstimatePair]]:
    """Estimate (outage, capacity) for every parameter set and scheme.

    All points and schemes share the same draws (common random numbers).
    Returns ``result[i][j]`` for ``params[i]`` and ``schemes[j]``.
    """
    if not schemes or not params:
        raise ArgumentError("simulate requires at least one scheme and one parameter set")

    tasks = _block_tasks(schemes, params, cfg)
    start = time.perf_counter()
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.workers, len(tasks))) as executor:
            block_sums = list(executor.map(_run_block, tasks))
    else:
        block_sums = [_run_block(task) for task in tasks]
    logger.debug(
        f"Simulated {cfg.trials} trials x {len(params)} points x {len(schemes)} schemes "
        f"in {len(tasks)} blocks on {cfg.workers} worker(s), "
        f"{time.perf_counter() - start:.2f}s"
    )

    stacked = np.stack(block_sums)  # (block, point, scheme, sum)
    n = cfg.trials
    results: List[List[EstimatePair]] = []
    for i in range(len(params)):
        row = []
        for j in range(len(schemes)):
            count, total, total_sq = (
                math.fsum(stacked[:, i, j, k]) for k in range(_N_SUMS)
            )
            row.append((_outage_estimate(count, n), _mean_estimate(total, total_sq, n)))
        results.append(row)
    return results


def estimate_both(s: Scheme, p: SystemParams, cfg: McConfig) -> EstimatePair:
    """Outage and capacity estimates from one shared set of draws."""
    return simulate([s], [p], cfg)[0][0]


def estimate_outage(s: Scheme, p: SystemParams, cfg: McConfig) -> McEstimate:
    """Indicator mean of {gamma_eff < gamma_th} with binomial standard error."""
    return estimate_both(s, p, cfg)[0]


def estimate_capacity(s: Scheme, p: SystemParams, cfg: McConfig) -> McEstimate:
    """Sample mean of 1/2 log2(1 + gamma_eff) with its standard error."""
    return estimate_both(s, p, cfg)[1]


def batch_std_err(samples: np.ndarray, batches: int = 100) -> float:
    """Standard error of the mean from the spread of ``batches`` batch means.

    Raises:
        ArgumentError: If fewer than two batches or fewer samples than batches
    """
    samples = np.asarray(samples, dtype=float)
    if batches < 2 or samples.size < batches:
        raise ArgumentError(
            f"batch_std_err needs >= 2 batches and >= {batches} samples, got {samples.size}"
        )
    means = np.array([chunk.mean() for chunk in np.array_split(samples, batches)])
    return float(np.std(means, ddof=1) / math.sqrt(batches))
