"""Special functions and quadrature rules used by the closed-form evaluators.

K1 and E1 are implemented here rather than taken from a numeric library so the
analytic module is self-contained; scipy only serves as an oracle in the tests.

K1 uses the ascending series (A&S 9.6.11) for x <= 2 and Steed's continued
fraction (Temme's CF2 as in Numerical Recipes ``bessik``) above. E1 uses its
power series for x <= 1 and the Lentz-evaluated continued fraction above.
"""

import logging
import math
from functools import lru_cache
from typing import Callable

import numpy as np

from swipt_relay.exceptions import ArgumentError, DomainError
from swipt_relay.models.analytic import ChebyshevRule

logger = logging.getLogger(__name__)

EULER_GAMMA = 0.57721566490153286061

_EPS = 1e-16
_FPMIN = 1e-300
_MAXIT = 10_000
# tan(theta) beyond this only feeds exponentials that have long underflowed
TAN_CAP = 1e15


def bessel_k1(x: float) -> float:
    """First-order modified Bessel function of the second kind, K1(x), for x > 0.

    Raises:
        DomainError: If ``x <= 0`` or ``x`` is NaN
    """
    if not x > 0.0:
        raise DomainError(f"bessel_k1 requires x > 0, got {x}")
    if x <= 2.0:
        return _k1_series(x)
    return _k1_continued_fraction(x)


def _k1_series(x: float) -> float:
    q = 0.25 * x * x
    term = 1.0  # q^k / (k! (k+1)!)
    i1_sum = 0.0
    psi_sum = 0.0
    harmonic = 0.0  # H_k
    k = 0
    while True:
        # psi(k+1) + psi(k+2)
        psi = -2.0 * EULER_GAMMA + 2.0 * harmonic + 1.0 / (k + 1)
        i1_sum += term
        psi_sum += psi * term
        k += 1
        term *= q / (k * (k + 1))
        harmonic += 1.0 / k
        if term < _EPS * i1_sum:
            break

    i1 = 0.5 * x * i1_sum
    return 1.0 / x + math.log(0.5 * x) * i1 - 0.25 * x * psi_sum


def _k1_continued_fraction(x: float) -> float:
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25  # 1/4 - mu^2 with mu = 0
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _MAXIT):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < _EPS:
            break
    else:
        logger.warning(f"K1 continued fraction did not converge at x={x}")

    h = a1 * h
    k0 = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    return k0 * (x + 0.5 - h) / x


def exp_integral_ei(x: float) -> float:
    """Exponential integral Ei(x) for negative arguments, Ei(x) = -E1(-x).

    Raises:
        DomainError: If ``x >= 0`` or ``x`` is NaN
    """
    if not x < 0.0:
        raise DomainError(f"exp_integral_ei requires x < 0, got {x}")
    return -exp_integral_e1(-x)


def exp_integral_e1(x: float) -> float:
    """E1(x) = int_x^inf e^-t / t dt for x > 0."""
    if not x > 0.0:
        raise DomainError(f"exp_integral_e1 requires x > 0, got {x}")
    if x <= 1.0:
        return _e1_series(x)
    return math.exp(-x) * _scaled_e1_continued_fraction(x)


def scaled_exp_e1(x: float) -> float:
    """e^x E1(x) for x > 0, finite for arguments where e^x alone overflows."""
    if not x > 0.0:
        raise DomainError(f"scaled_exp_e1 requires x > 0, got {x}")
    if x <= 1.0:
        return math.exp(x) * _e1_series(x)
    return _scaled_e1_continued_fraction(x)


def _e1_series(x: float) -> float:
    total = 0.0
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= -x / k
        contribution = term / k
        total += contribution
        if abs(contribution) < _EPS * abs(total):
            break
    return -EULER_GAMMA - math.log(x) - total


def _scaled_e1_continued_fraction(x: float) -> float:
    b = x + 1.0
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAXIT):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    else:
        logger.warning(f"E1 continued fraction did not converge at x={x}")
    return h


@lru_cache(maxsize=64)
def chebyshev_rule(n: int) -> ChebyshevRule:
    """Gauss-Chebyshev rule with ``n`` nodes.

    Nodes are mirrored from the first half so the rule is exactly symmetric.

    Raises:
        ArgumentError: If ``n < 1``
    """
    if n < 1:
        raise ArgumentError(f"chebyshev_rule requires n >= 1, got {n}")
    half = [math.cos((2 * i - 1) * math.pi / (2 * n)) for i in range(1, n // 2 + 1)]
    middle = [0.0] if n % 2 else []
    nodes = tuple(half + middle + [-f for f in reversed(half)])
    return ChebyshevRule(n=n, nodes=nodes, weight=math.pi / n)


def rule_arrays(rule: ChebyshevRule) -> tuple[np.ndarray, np.ndarray]:
    """Return the node array and the per-node factors weight * sqrt(1 - f^2)."""
    f = np.asarray(rule.nodes)
    return f, rule.weight * np.sqrt(1.0 - f * f)


def integrate(rule: ChebyshevRule, g: Callable[[np.ndarray], np.ndarray]) -> float:
    """Approximate int_{-1}^{1} g(t) dt; ``g`` must accept numpy arrays."""
    f, w = rule_arrays(rule)
    return float(np.sum(w * g(f)))


def integrate_interval(
    rule: ChebyshevRule, g: Callable[[np.ndarray], np.ndarray], lo: float, hi: float
) -> float:
    """Approximate int_lo^hi g(x) dx by the affine map x = lo + (hi - lo)(t + 1)/2."""
    half = 0.5 * (hi - lo)
    return half * integrate(rule, lambda t: g(lo + half * (t + 1.0)))


def tan_nodes(rule: ChebyshevRule) -> tuple[np.ndarray, np.ndarray]:
    """Half-line nodes y = tan(theta), theta = pi/4 (f + 1), with their Jacobian sec^2(theta)."""
    f = np.asarray(rule.nodes)
    theta = 0.25 * math.pi * (f + 1.0)
    tan = np.minimum(np.tan(theta), TAN_CAP)
    return tan, 1.0 + tan * tan


def integrate_half_line(
    rule: ChebyshevRule, g: Callable[[np.ndarray], np.ndarray]
) -> float:
    """Approximate int_0^inf g(y) dy through y = tan(theta)."""
    _, w = rule_arrays(rule)
    y, sec2 = tan_nodes(rule)
    with np.errstate(over="ignore", under="ignore"):
        values = g(y) * sec2
    return 0.25 * math.pi * float(np.sum(w * values))
