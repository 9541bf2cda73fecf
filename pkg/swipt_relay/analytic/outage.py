"""Outage probability of the optimal DPSS relay link and its diversity order.

The outage event splits into P1 (relay weaker than the direct link, direct
transmission fails) and P2 = P21 + P22 (relay used). P22 carries the only
non-elementary term, a Bessel-kernel integral P222 that is either integrated
numerically (``EvalMode.EXACT``) or replaced by its small-argument expansion
closed with Gauss-Chebyshev quadrature (``EvalMode.APPROX``).
"""

import logging
import math
from typing import Tuple

import numpy as np
from scipy import integrate

from swipt_relay.exceptions import ArgumentError, OutageRangeError
from swipt_relay.models.analytic import (
    ChebyshevRule,
    EvalMode,
    OutageTerms,
    QuadratureSpec,
)
from swipt_relay.models.system import Scheme, SchemeKind, SystemParams
from swipt_relay.specfun import EULER_GAMMA, bessel_k1, chebyshev_rule, rule_arrays

logger = logging.getLogger(__name__)

EXACT_EPSABS = 1e-12
EXACT_EPSREL = 1e-10
_QUAD_LIMIT = 200
MIN_OUTAGE = 1e-300


def _clip_probability(value: float) -> float:
    return min(max(value, 0.0), 1.0)


def _one_minus_exp(t: float) -> float:
    """1 - e^-t without cancellation for small t."""
    return -math.expm1(-t)


def outage_p1(p: SystemParams) -> float:
    """P(gamma_in x < gamma_th, y < x): relay weaker and direct link in outage."""
    a, l0, l1 = p.a, p.lambda0, p.lambda1
    value = l1 / (l0 + l1) * _one_minus_exp((l0 + l1) * a) - math.exp(
        -l0 * a
    ) * _one_minus_exp(l1 * a)
    return _clip_probability(value)


def outage_p21(p: SystemParams) -> float:
    """P(x < y < a): relay used but the first hop alone already fails."""
    a, l0, l1 = p.a, p.lambda0, p.lambda1
    # lambda0/L + lambda1/L e^{-L a} - e^{-lambda1 a}, regrouped so both terms vanish with a
    value = l0 / (l0 + l1) * _one_minus_exp((l0 + l1) * a) - math.exp(
        -l1 * a
    ) * _one_minus_exp(l0 * a)
    return _clip_probability(value)


def outage_p221(p: SystemParams) -> float:
    a = p.a
    return _clip_probability(_one_minus_exp(p.lambda0 * a) * math.exp(-p.lambda1 * a))


def _theta(p: SystemParams, x: float) -> float:
    return math.sqrt(4.0 * max(p.a - x, 0.0) * p.lambda1 * p.lambda2 / p.eta)


def _theta_k1(theta: float) -> float:
    # theta K1(theta) -> 1 as theta -> 0
    if theta == 0.0:
        return 1.0
    return theta * bessel_k1(theta)


def _quad(func, lo: float, hi: float) -> float:
    value, error = integrate.quad(
        func, lo, hi, epsabs=EXACT_EPSABS, epsrel=EXACT_EPSREL, limit=_QUAD_LIMIT
    )
    logger.debug(f"quad over [{lo:.3g}, {hi:.3g}] = {value:.6g} (err {error:.2g})")
    return value


def _p222_exact(p: SystemParams) -> float:
    a = p.a
    integral = _quad(lambda x: math.exp(-p.lambda0 * x) * _theta_k1(_theta(p, x)), 0.0, a)
    return math.exp(-p.lambda1 * a) / p.lambda1 * integral


def _p22_exact(p: SystemParams) -> float:
    """P221 - lambda0 lambda1 P222 evaluated as one integral of 1 - theta K1(theta)."""
    a = p.a
    integral = _quad(
        lambda x: math.exp(-p.lambda0 * x) * (1.0 - _theta_k1(_theta(p, x))), 0.0, a
    )
    return math.exp(-p.lambda1 * a) * p.lambda0 * integral


def chebyshev_log_integral(
    a: float, lam0: float, rule: ChebyshevRule, subtract_singularity: bool = True
) -> float:
    """Approximate int_0^a e^{lam0 x} ln(x) dx with nodes x_i = a (f_i + 1) / 2.

    With ``subtract_singularity`` the first two Taylor terms of e^{lam0 x} are
    integrated against ln x in closed form,

        int_0^a (1 + lam0 x) ln x dx = a ln a - a + lam0 (a^2 ln a / 2 - a^2 / 4),

    and the rule only sees (e^{lam0 x} - 1 - lam0 x) ln x = O(x^2 ln x). The
    rule is still not exact for that remainder: its error is about
    (pi / n)^2 / 24 times the remainder integrand at x = a, so the result is
    exact only for lam0 = 0. The plain rule converges as O(n^-2 ln n) because
    of the log singularity at x = 0.
    """
    f, w = rule_arrays(rule)
    x = 0.5 * a * (f + 1.0)
    if subtract_singularity:
        t = lam0 * x
        remainder = 0.5 * a * float(np.sum(w * (np.expm1(t) - t) * np.log(x)))
        log_a = math.log(a)
        closed = a * log_a - a + lam0 * a * a * (0.5 * log_a - 0.25)
        return closed + remainder
    return 0.5 * a * float(np.sum(w * np.exp(lam0 * x) * np.log(x)))


def outage_constants(
    p: SystemParams, corrected_expansion: bool = False
) -> Tuple[float, float]:
    """Return (phi_out, lambda_cap), the coefficients of the high-SNR expansion.

    The default expansion is theta K1(theta) ~ 1 + (theta^2 / 2) ln(theta / 2).
    It drops the (theta^2 / 2)(EULER_GAMMA - 1/2) term, which is of the same
    order, so its relative error only decays like 1 / ln(1 / a).
    ``corrected_expansion`` keeps that term; it only shifts phi_out by
    lambda_cap (2 EULER_GAMMA - 1), and the remaining error is O(a) relative.
    """
    a, l0, l1, l2, eta = p.a, p.lambda0, p.lambda1, p.lambda2, p.eta
    lambda_cap = l2 * math.exp(-(l0 + l1) * a) / (eta * l0)
    log_term = math.log(l1 * l2 / eta)
    if corrected_expansion:
        log_term += 2.0 * EULER_GAMMA - 1.0
    phi_out = lambda_cap * log_term
    return phi_out, lambda_cap


def _p222_approx_brackets(
    p: SystemParams, q: QuadratureSpec, subtract_singularity: bool = True
) -> Tuple[float, float]:
    """Return the brackets multiplying phi_out and lambda_cap."""
    a, l0 = p.a, p.lambda0
    grow = math.exp(l0 * a)
    ramp = math.expm1(l0 * a) / l0
    log_integral = chebyshev_log_integral(
        a, l0, chebyshev_rule(q.n_outage), subtract_singularity
    )
    phi_bracket = a * grow - ramp
    lambda_bracket = a * math.log(a) * grow - ramp - log_integral
    return phi_bracket, lambda_bracket


def outage_p222(
    p: SystemParams,
    mode: EvalMode = EvalMode.EXACT,
    q: QuadratureSpec = QuadratureSpec(),
    subtract_singularity: bool = True,
    corrected_expansion: bool = False,
) -> float:
    """Bessel-kernel term of P22.

    Exact integrates e^{-lambda0 x} theta K1(theta) over [0, a] adaptively,
    theta = sqrt(4 (a - x) lambda1 lambda2 / eta). Approx expands theta K1(theta)
    around theta = 0, which is accurate once a = gamma_th / gamma_in is small;
    see ``outage_constants`` for the two expansions.
    """
    if mode is EvalMode.EXACT:
        return max(_p222_exact(p), 0.0)

    a, l0, l1 = p.a, p.lambda0, p.lambda1
    phi_out, lambda_cap = outage_constants(p, corrected_expansion)
    phi_bracket, lambda_bracket = _p222_approx_brackets(p, q, subtract_singularity)
    leading = math.exp(-l1 * a) / (l0 * l1) * _one_minus_exp(l0 * a)
    return max(leading + phi_out * phi_bracket + lambda_cap * lambda_bracket, 0.0)


def outage_probability(
    p: SystemParams,
    mode: EvalMode = EvalMode.EXACT,
    q: QuadratureSpec = QuadratureSpec(),
    subtract_singularity: bool = True,
    corrected_expansion: bool = False,
) -> OutageTerms:
    """Outage probability of the proposed scheme with all of its partial terms.

    ``total`` is P1 + P21 + P22 clamped to [0, 1]; ``raw_total`` keeps the
    unclamped value. P22 is computed without forming P221 - lambda0 lambda1 P222
    explicitly: in Exact mode through the integral of 1 - theta K1(theta), in
    Approx mode by dropping the leading term that cancels P221 identically.
    ``corrected_expansion`` only affects Approx mode.
    """
    a = p.a
    p1 = outage_p1(p)
    p21 = outage_p21(p)
    p221 = outage_p221(p)
    phi_out, lambda_cap = outage_constants(p, corrected_expansion)

    if mode is EvalMode.EXACT:
        p222 = outage_p222(p, mode, q)
        p22 = _p22_exact(p)
    else:
        p222 = outage_p222(p, mode, q, subtract_singularity, corrected_expansion)
        phi_bracket, lambda_bracket = _p222_approx_brackets(p, q, subtract_singularity)
        p22 = -p.lambda0 * p.lambda1 * (phi_out * phi_bracket + lambda_cap * lambda_bracket)

    raw_total = p1 + p21 + p22
    logger.debug(
        f"Outage ({mode.value}) at {p.snr_db:.2f} dB: a={a:.4g} p1={p1:.4g} "
        f"p21={p21:.4g} p22={p22:.4g} total={raw_total:.6g}"
    )
    return OutageTerms(
        mode=mode,
        a=a,
        p1=p1,
        p21=p21,
        p221=p221,
        p222=p222,
        p22=p22,
        phi_out=phi_out,
        lambda_cap=lambda_cap,
        raw_total=raw_total,
        total=_clip_probability(raw_total),
    )


def noncooperative_outage(p: SystemParams) -> float:
    """Outage of direct transmission only, P(gamma_in x < gamma_th) = 1 - e^{-lambda0 a}."""
    return _one_minus_exp(p.lambda0 * p.a)


def _scheme_outage(p: SystemParams, scheme: Scheme, q: QuadratureSpec) -> float:
    if scheme.kind is SchemeKind.PROPOSED:
        return outage_probability(p, EvalMode.EXACT, q).total
    if scheme.kind is SchemeKind.NONCOOP:
        return noncooperative_outage(p)
    raise ArgumentError(
        f"No closed-form outage for scheme '{scheme}'; use the Monte Carlo engine"
    )


def diversity_order(
    p: SystemParams,
    snr_lo_db: float,
    snr_hi_db: float,
    scheme: Scheme = Scheme.proposed_dpss(),
    q: QuadratureSpec = QuadratureSpec(),
) -> float:
    """High-SNR slope -d log10(P_out) / d(SNR_dB / 10) between two SNR points.

    Raises:
        ArgumentError: If ``snr_hi_db <= snr_lo_db`` or the scheme has no closed form
        OutageRangeError: If the outage underflows at either endpoint
    """
    if snr_hi_db <= snr_lo_db:
        raise ArgumentError(
            f"Diversity window needs snr_hi_db > snr_lo_db, got [{snr_lo_db}, {snr_hi_db}]"
        )
    if snr_lo_db < 20.0:
        logger.warning(
            f"Diversity window starts at {snr_lo_db} dB, below the asymptotic regime"
        )

    outages = []
    for snr_db in (snr_lo_db, snr_hi_db):
        value = _scheme_outage(p.with_snr_db(snr_db), scheme, q)
        if value < MIN_OUTAGE:
            raise OutageRangeError(
                f"Outage {value:.3g} at {snr_db} dB underflows; choose a lower SNR window"
            )
        outages.append(value)

    slope = -(math.log10(outages[1]) - math.log10(outages[0])) / (
        (snr_hi_db - snr_lo_db) / 10.0
    )
    logger.debug(f"Diversity order of {scheme} over [{snr_lo_db}, {snr_hi_db}] dB: {slope:.4f}")
    return slope
