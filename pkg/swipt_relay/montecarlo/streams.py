"""Counter-based random substreams and Rayleigh channel-gain sampling.

Trial ``t`` always belongs to block ``t // block_size`` and every block owns
its own Philox counter range keyed by the seed, so a block draws the same
numbers whichever worker runs it.
"""

from typing import Tuple

import numpy as np

from swipt_relay.models.system import ChannelGains, SystemParams

# uniforms drawn per trial: x, y, z and the random scheme's PS factor
DRAWS_PER_TRIAL = 4


def block_stream(seed: int, block_index: int) -> np.random.Generator:
    """Generator for one block; blocks differ in the second counter word."""
    return np.random.Generator(np.random.Philox(key=seed, counter=block_index << 64))


def stream(seed: int) -> np.random.Generator:
    """Deterministic stream starting at block 0."""
    return block_stream(seed, 0)


def exponential_from_uniform(u: np.ndarray, rate: float) -> np.ndarray:
    """Inverse-CDF exponential draw -ln(1 - u) / rate for u in [0, 1)."""
    return -np.log1p(-u) / rate


def sample_gains(p: SystemParams, rng: np.random.Generator) -> ChannelGains:
    """One realization of the exponential power gains X, Y, Z with rates lambda0..2."""
    u = rng.random(3)
    return ChannelGains(
        x=float(exponential_from_uniform(u[0], p.lambda0)),
        y=float(exponential_from_uniform(u[1], p.lambda1)),
        z=float(exponential_from_uniform(u[2], p.lambda2)),
    )


def sample_uniform_block(seed: int, block_index: int, size: int) -> np.ndarray:
    """Uniforms of one block, shape (DRAWS_PER_TRIAL, size)."""
    return block_stream(seed, block_index).random((DRAWS_PER_TRIAL, size))


def gains_from_uniforms(
    p: SystemParams, uniforms: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Map a uniform block to (x, y, z, rho_random) arrays."""
    x = exponential_from_uniform(uniforms[0], p.lambda0)
    y = exponential_from_uniform(uniforms[1], p.lambda1)
    z = exponential_from_uniform(uniforms[2], p.lambda2)
    return x, y, z, uniforms[3]


def sample_gain_arrays(
    p: SystemParams, rng: np.random.Generator, size: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """``size`` realizations as arrays (x, y, z, rho_random)."""
    return gains_from_uniforms(p, rng.random((DRAWS_PER_TRIAL, size)))
