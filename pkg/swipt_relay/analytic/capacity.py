"""Ergodic capacity of the optimal DPSS relay link.

C = C1 + C2 where C1 averages the direct-transmission rate over the region
y < x and C2 averages the relayed rate 1/2 log2(1 + gamma_op) over x <= y.
The Chebyshev forms follow the tan-substitution closed forms; the ``*_exact``
companions integrate the same expectations adaptively and serve as oracles.
"""

import logging
import math
from typing import Iterable

import numpy as np
from scipy import integrate

from swipt_relay.models.analytic import EvalMode, QuadratureSpec
from swipt_relay.models.system import SystemParams
from swipt_relay.specfun import chebyshev_rule, rule_arrays, scaled_exp_e1, tan_nodes

from .outage import EXACT_EPSABS, EXACT_EPSREL

logger = logging.getLogger(__name__)

_LN2 = math.log(2.0)


def _scaled_exp_e1_array(values: Iterable[float]) -> np.ndarray:
    return np.array([scaled_exp_e1(float(v)) for v in values])


def capacity_c1(p: SystemParams, q: QuadratureSpec = QuadratureSpec()) -> float:
    """C1 with the y-integral closed by an M-node tan-mapped Chebyshev rule.

    Integrating x out first leaves
    lambda1/(L) e^{L/g} E1(L/g) + lambda1 int_0^inf e^{-L y} e^{s} E1(s) dy,
    s = lambda0 (y + 1/g), L = lambda0 + lambda1, everything over 2 ln 2.
    """
    g, l0, l1 = p.gamma_in, p.lambda0, p.lambda1
    total_rate = l0 + l1
    first = l1 / total_rate * scaled_exp_e1(total_rate / g)

    rule = chebyshev_rule(q.m_cap)
    _, w = rule_arrays(rule)
    y, sec2 = tan_nodes(rule)
    with np.errstate(under="ignore"):
        decay = np.exp(-total_rate * y)
    kernel = _scaled_exp_e1_array(l0 * y + l0 / g)
    second = 0.25 * math.pi * l1 * float(np.sum(w * decay * kernel * sec2))

    return (first + second) / (2.0 * _LN2)


def capacity_c1_exact(p: SystemParams) -> float:
    """C1 as the adaptive double integral of the direct-link rate over y < x."""
    g, l0, l1 = p.gamma_in, p.lambda0, p.lambda1

    def rate_density(x: float, y: float) -> float:
        return math.log1p(g * x) * l0 * math.exp(-l0 * x) * l1 * math.exp(-l1 * y)

    value, error = integrate.dblquad(
        rate_density,
        0.0,
        np.inf,
        lambda y: y,
        np.inf,
        epsabs=EXACT_EPSABS,
        epsrel=EXACT_EPSREL,
    )
    logger.debug(f"C1 exact at {p.snr_db:.2f} dB: {value:.8g} (err {error:.2g})")
    return value / (2.0 * _LN2)


def capacity_c2(p: SystemParams, q: QuadratureSpec = QuadratureSpec()) -> float:
    """C2 as a triple Gauss-Chebyshev sum.

    x in [0, y] uses nodes c_i = f_i + 1 scaled by y/2; y and z run over the
    half line through tan(pi/4 (f + 1)).
    """
    g, eta = p.gamma_in, p.eta
    l0, l1, l2 = p.lambda0, p.lambda1, p.lambda2

    f1, w1 = rule_arrays(chebyshev_rule(q.n1))
    rule_y = chebyshev_rule(q.n2)
    rule_z = chebyshev_rule(q.n3)
    _, w2 = rule_arrays(rule_y)
    _, w3 = rule_arrays(rule_z)
    y, sec2_y = tan_nodes(rule_y)
    z, sec2_z = tan_nodes(rule_z)

    # axes: (x node, y node, z node)
    yy = y[None, :, None]
    zz = z[None, None, :]
    xx = 0.5 * yy * (f1[:, None, None] + 1.0)

    with np.errstate(over="ignore", under="ignore"):
        snr = g * (xx + eta * yy * zz) / (1.0 + eta * zz)
        integrand = np.log1p(snr) * np.exp(-l0 * xx - l1 * yy - l2 * zz)
        weights = (
            w1[:, None, None]
            * (w2 * sec2_y)[None, :, None]
            * (w3 * sec2_z)[None, None, :]
            * 0.5
            * yy
        )
        total = float(np.sum(weights * integrand))

    return l0 * l1 * l2 * (0.25 * math.pi) ** 2 * total / (2.0 * _LN2)


def capacity_c2_exact(p: SystemParams) -> float:
    """C2 with the x-integral in closed form and (y, z) integrated adaptively.

    For fixed (y, z) the relayed SNR is affine in x, 1 + gamma_op = A + B x, so
    int_0^y ln(A + B x) lambda0 e^{-lambda0 x} dx
      = ln A - e^{-lambda0 y} ln(A + B y) + e^s E1(s) - e^{-lambda0 y} e^{s'} E1(s'),
    with s = lambda0 A / B and s' = s + lambda0 y.
    """
    g, eta = p.gamma_in, p.eta
    l0, l1, l2 = p.lambda0, p.lambda1, p.lambda2

    def inner(y: float, z: float) -> float:
        if y == 0.0:
            return 0.0
        denom = 1.0 + eta * z
        big_a = 1.0 + g * eta * y * z / denom
        big_b = g / denom
        s = l0 * big_a / big_b
        decay = math.exp(-l0 * y)
        return (
            math.log(big_a)
            - decay * math.log(big_a + big_b * y)
            + scaled_exp_e1(s)
            - decay * scaled_exp_e1(s + l0 * y)
        )

    def density(y: float, z: float) -> float:
        weight = l1 * math.exp(-l1 * y) * l2 * math.exp(-l2 * z)
        if weight == 0.0:
            return 0.0
        return weight * inner(y, z)

    value, error = integrate.dblquad(
        density, 0.0, np.inf, 0.0, np.inf, epsabs=EXACT_EPSABS, epsrel=EXACT_EPSREL
    )
    logger.debug(f"C2 exact at {p.snr_db:.2f} dB: {value:.8g} (err {error:.2g})")
    return value / (2.0 * _LN2)


def ergodic_capacity(
    p: SystemParams,
    q: QuadratureSpec = QuadratureSpec(),
    mode: EvalMode = EvalMode.APPROX,
) -> float:
    """C1 + C2; Approx uses the Chebyshev forms, Exact the adaptive companions."""
    if mode is EvalMode.EXACT:
        c1, c2 = capacity_c1_exact(p), capacity_c2_exact(p)
    else:
        c1, c2 = capacity_c1(p, q), capacity_c2(p, q)
    logger.debug(
        f"Capacity ({mode.value}) at {p.snr_db:.2f} dB: C1={c1:.6g} C2={c2:.6g}"
    )
    return max(c1, 0.0) + max(c2, 0.0)


def noncooperative_capacity(p: SystemParams) -> float:
    """E[1/2 log2(1 + gamma_in x)] = e^{lambda0/g} E1(lambda0/g) / (2 ln 2)."""
    return scaled_exp_e1(p.lambda0 / p.gamma_in) / (2.0 * _LN2)
