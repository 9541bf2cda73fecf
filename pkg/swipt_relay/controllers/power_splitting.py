"""Per-realization SNR model and power-splitting policies.

Scalar functions take validated ``SystemParams``/``ChannelGains`` models; the
``*_array`` variants evaluate the same formulas over numpy arrays of gains and
are what the Monte Carlo engine calls.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from swipt_relay.exceptions import ArgumentError, DomainError
from swipt_relay.models.system import (
    ChannelGains,
    PsDecision,
    Scheme,
    SchemeKind,
    SystemParams,
)

logger = logging.getLogger(__name__)

_LN2 = math.log(2.0)


def snr_components(
    p: SystemParams, g: ChannelGains, rho: float
) -> Tuple[float, float, float]:
    """Return (gamma_r, gamma_sd, gamma_rd) for the PS factor ``rho``.

    gamma_r is the relay's information-branch SNR in the first slot, gamma_sd
    the direct-link SNR at the destination and gamma_rd the SNR of the
    energy-harvesting relay's retransmission in the second slot.
    """
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho must lie in [0, 1], got {rho}")
    gamma_r = (1.0 - rho) * p.gamma_in * g.y
    gamma_sd = p.gamma_in * g.x
    gamma_rd = p.eta * rho * p.gamma_in * g.y * g.z
    return gamma_r, gamma_sd, gamma_rd


def optimal_rho(p: SystemParams, g: ChannelGains) -> PsDecision:
    """Max-min optimal dynamic PS factor for DF relaying with MRC of the direct link.

    When the source-relay gain is weaker than the direct link the relay cannot
    help and the optimum degenerates to direct transmission (rho = 0, relay
    silent). Otherwise rho equalises the relay SNR and the combined SNR at the
    destination.
    """
    x, y, z = g.x, g.y, g.z
    if y < x:
        return PsDecision(rho=0.0, gamma_end=p.gamma_in * x, used_relay=False)
    if y == 0.0:
        # x == y == 0: no signal anywhere
        return PsDecision(rho=0.0, gamma_end=0.0, used_relay=False)

    eyz = p.eta * y * z
    rho = (y - x) / (y + eyz)
    gamma_end = p.gamma_in * (x + eyz) / (1.0 + p.eta * z)
    return PsDecision(rho=rho, gamma_end=gamma_end, used_relay=True)


def max_min_snr(p: SystemParams, g: ChannelGains) -> float:
    """max over rho of min(gamma_r, gamma_sd + gamma_rd), without the direct-link fallback.

    Differs from ``optimal_rho(...).gamma_end`` only when y < x, where the
    min-form is limited by the relay (gamma_in * y).
    """
    if g.y < g.x:
        return p.gamma_in * g.y
    return optimal_rho(p, g).gamma_end


def legacy_rho(p: SystemParams, g: ChannelGains) -> float:
    """Rate-driven DPSS factor: harvest everything beyond what decoding at the threshold needs."""
    received = p.gamma_in * g.y
    if received <= p.gamma_th:
        return 0.0
    return 1.0 - p.gamma_th / received


def effective_snr(
    s: Scheme,
    p: SystemParams,
    g: ChannelGains,
    rho_random: Optional[float] = None,
) -> float:
    """End-to-end SNR a scheme achieves on one realization.

    Raises:
        ArgumentError: If ``rho_random`` is missing for the random scheme or
            supplied for any other scheme
    """
    if s.kind is SchemeKind.RANDOM:
        if rho_random is None:
            raise ArgumentError("random scheme requires rho_random")
    elif rho_random is not None:
        raise ArgumentError(f"rho_random is only accepted by the random scheme, not '{s}'")

    if s.kind is SchemeKind.PROPOSED:
        return optimal_rho(p, g).gamma_end
    if s.kind is SchemeKind.NONCOOP:
        return p.gamma_in * g.x
    if s.kind in (SchemeKind.LEGACY, SchemeKind.LEGACY_DL):
        rho = legacy_rho(p, g)
        _, gamma_sd, gamma_rd = snr_components(p, g, rho)
        # (1 - rho) * gamma_in * y equals gamma_th exactly whenever rho > 0
        gamma_r = p.gamma_th if rho > 0.0 else p.gamma_in * g.y
        if s.kind is SchemeKind.LEGACY:
            return min(gamma_r, gamma_rd)
        return min(gamma_r, gamma_sd + gamma_rd)

    rho = rho_random if s.kind is SchemeKind.RANDOM else s.rho
    gamma_r, gamma_sd, gamma_rd = snr_components(p, g, rho)
    return min(gamma_r, gamma_sd + gamma_rd)


def achievable_rate(gamma_end: float) -> float:
    """Half-duplex achievable rate 1/2 log2(1 + gamma) in bits/s/Hz."""
    if gamma_end < 0.0:
        raise DomainError(f"SNR must be non-negative, got {gamma_end}")
    return math.log1p(gamma_end) / (2.0 * _LN2)


# Vectorised forms


def optimal_snr_array(
    p: SystemParams, x: np.ndarray, y: np.ndarray, z: np.ndarray
) -> np.ndarray:
    relay = p.gamma_in * (x + p.eta * y * z) / (1.0 + p.eta * z)
    return np.where(y < x, p.gamma_in * x, relay)


def optimal_rho_array(
    p: SystemParams, x: np.ndarray, y: np.ndarray, z: np.ndarray
) -> np.ndarray:
    denom = y + p.eta * y * z
    ratio = np.divide(y - x, denom, out=np.zeros_like(denom), where=denom > 0)
    return np.where(y < x, 0.0, ratio)


def max_min_snr_array(
    p: SystemParams, x: np.ndarray, y: np.ndarray, z: np.ndarray
) -> np.ndarray:
    relay = p.gamma_in * (x + p.eta * y * z) / (1.0 + p.eta * z)
    return np.where(y < x, p.gamma_in * y, relay)


def legacy_rho_array(p: SystemParams, y: np.ndarray) -> np.ndarray:
    received = p.gamma_in * y
    ratio = np.divide(p.gamma_th, received, out=np.ones_like(received), where=received > 0)
    return np.where(received > p.gamma_th, 1.0 - ratio, 0.0)


def effective_snr_array(
    s: Scheme,
    p: SystemParams,
    x: np.ndarray,
    y: np.ndarray,
    z: np.ndarray,
    u: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Array form of ``effective_snr``; ``u`` holds the random scheme's PS factors."""
    if s.kind is SchemeKind.PROPOSED:
        return optimal_snr_array(p, x, y, z)
    if s.kind is SchemeKind.NONCOOP:
        return p.gamma_in * x

    if s.kind in (SchemeKind.LEGACY, SchemeKind.LEGACY_DL):
        rho = legacy_rho_array(p, y)
        gamma_r = np.where(rho > 0.0, p.gamma_th, p.gamma_in * y)
        gamma_rd = p.eta * rho * p.gamma_in * y * z
        if s.kind is SchemeKind.LEGACY:
            return np.minimum(gamma_r, gamma_rd)
        return np.minimum(gamma_r, p.gamma_in * x + gamma_rd)

    if s.kind is SchemeKind.RANDOM:
        if u is None:
            raise ArgumentError("random scheme requires per-realization PS factors")
        rho = u
    else:
        rho = s.rho
    gamma_r = (1.0 - rho) * p.gamma_in * y
    gamma_d = p.gamma_in * x + p.eta * rho * p.gamma_in * y * z
    return np.minimum(gamma_r, gamma_d)


def rate_array(gamma_end: np.ndarray) -> np.ndarray:
    return np.log1p(gamma_end) / (2.0 * _LN2)
