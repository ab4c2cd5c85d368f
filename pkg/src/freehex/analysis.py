"""Floating-point layer: correlation integrals and asymptotic-law checks.

Everything upstream is exact; this module owns every float.  The
correlation integrals are evaluated by composite Gauss-Legendre after the
substitution alpha = 1 - cos(theta), which turns the 1/sqrt(alpha(2-alpha))
endpoint weight into d(theta) exactly, so plain panels converge fast.
Prefactors that overflow doubles are carried in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .errors import NoConvergence, PoleInRange, SingularParameter
from .exactnum import Rational

_HALF_PI = math.pi / 2
_CONCENTRATION_K = 500
_EXACT_LOG_BINOMIAL_LIMIT = 40001


@dataclass(frozen=True)
class QuadratureSpec:
    """Panel-doubling composite Gauss-Legendre parameters.

    Refinement doubles the panel count until the relative change drops
    below tol; the last change is reported as the error estimate.
    """

    panels: int = 8
    nodes_per_panel: int = 16
    max_panels: int = 1 << 14
    tol: float = 1e-12


DEFAULT_QUADRATURE = QuadratureSpec()


@dataclass(frozen=True)
class CorrelationValue:
    """A gap-boundary correlation at one (k, xi), with quadrature error.

    value can underflow to 0.0 for strongly decaying parameters while
    log_value stays finite.
    """

    k: int
    xi: float
    value: float
    log_value: float
    err_estimate: float


_gl_cache: Dict[int, Tuple[np.ndarray, np.ndarray]] = {}


def _gauss01(m: int) -> Tuple[np.ndarray, np.ndarray]:
    if m not in _gl_cache:
        x, w = np.polynomial.legendre.leggauss(m)
        _gl_cache[m] = ((x + 1.0) / 2.0, w / 2.0)
    return _gl_cache[m]


def _composite(f: Callable[[np.ndarray], np.ndarray], edges: np.ndarray, m: int) -> float:
    xs, ws = _gauss01(m)
    a = edges[:-1]
    h = edges[1:] - a
    pts = a[:, None] + h[:, None] * xs[None, :]
    vals = f(pts.ravel())
    return float(np.dot(vals, (h[:, None] * ws[None, :]).ravel()))


def _refine(
    f: Callable[[np.ndarray], np.ndarray],
    q: QuadratureSpec,
    edges_fn: Callable[[int], np.ndarray],
) -> Tuple[float, float]:
    panels = q.panels
    prev: Optional[float] = None
    while panels <= q.max_panels:
        val = _composite(f, edges_fn(panels), q.nodes_per_panel)
        if prev is not None:
            err = abs(val - prev)
            if err <= q.tol * max(abs(val), 1e-300):
                return val, err
        prev = val
        panels *= 2
    raise NoConvergence(f"no convergence within {q.max_panels} panels")


def _theta_edges(panels: int, k: int) -> np.ndarray:
    # Mass concentrates in theta = O(k^{-1/2}) for large k; uniform panels
    # would starve that neighborhood, so grade geometrically toward 0.
    if k < _CONCENTRATION_K:
        return np.linspace(0.0, _HALF_PI, panels + 1)
    t0 = (8.0 / panels) / (4.0 * math.sqrt(4.0 * k + 2.0))
    return np.concatenate(([0.0], np.geomspace(t0, _HALF_PI, panels)))


def _log_binomial(m: int, j: int) -> float:
    if m <= _EXACT_LOG_BINOMIAL_LIMIT:
        return math.log(math.comb(m, j))
    return math.lgamma(m + 1) - math.lgamma(j + 1) - math.lgamma(m - j + 1)


def _safe_exp(logv: float) -> float:
    if logv < -745.0:
        return 0.0
    if logv > 709.0:
        return math.inf
    return math.exp(logv)


def integral_I(beta: float, k: int, q: Optional[QuadratureSpec] = None) -> float:
    """Boundary-interaction integral, for beta > 0 or beta < -1.

    Integral over [0, 1] of (1-a)^(4k+2) / ((1+a/beta) sqrt(a(2-a))) da,
    computed on [0, pi/2] after a = 1 - cos(theta).
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    beta = float(beta)
    if -1.0 <= beta <= 0.0:
        raise PoleInRange(f"integrand has a pole on [0, 1] for beta = {beta}")
    q = q or DEFAULT_QUADRATURE
    power = 4 * k + 2

    def f(theta: np.ndarray) -> np.ndarray:
        c = np.cos(theta)
        return c**power / (1.0 + (1.0 - c) / beta)

    val, _ = _refine(f, q, lambda p: _theta_edges(p, k))
    return val


def _integral_reference(beta: float, k: int, q: Optional[QuadratureSpec] = None) -> float:
    # Same integral through u = sqrt(alpha) instead, as an independent
    # transcription check on the trigonometric route.
    if -1.0 <= beta <= 0.0:
        raise PoleInRange(f"integrand has a pole on [0, 1] for beta = {beta}")
    q = q or DEFAULT_QUADRATURE
    power = 4 * k + 2

    def f(u: np.ndarray) -> np.ndarray:
        s = u * u
        return 2.0 * (1.0 - s) ** power / ((1.0 + s / beta) * np.sqrt(2.0 - s))

    val, _ = _refine(f, q, lambda p: np.linspace(0.0, 1.0, p + 1))
    return val


def _log_prefactor(k: int, xi: float) -> float:
    return (
        -math.log(math.pi)
        + _log_binomial(4 * k + 1, 2 * k)
        - (4 * k + 2) * math.log1p(xi)
        - 0.5 * math.log(2.0 + xi)
    )


def omega_f(k: int, xi: float, q: Optional[QuadratureSpec] = None) -> CorrelationValue:
    """Gap-boundary correlation at distance k, boundary aspect ratio xi."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    xi = float(xi)
    if xi <= 0.0:
        raise PoleInRange(f"need xi > 0, got {xi}")
    q = q or DEFAULT_QUADRATURE
    power = 4 * k + 3

    def f(theta: np.ndarray) -> np.ndarray:
        c = np.cos(theta)
        a = 1.0 - c
        return 2.0 * c**power / ((1.0 + a / xi) * (1.0 - a / (2.0 + xi)))

    integral, err = _refine(f, q, lambda p: _theta_edges(p, k))
    logpre = _log_prefactor(k, xi)
    log_value = logpre + math.log(integral)
    value = _safe_exp(log_value)
    err_scaled = _safe_exp(logpre + math.log(err)) if err > 0.0 else 0.0
    return CorrelationValue(k=k, xi=xi, value=value, log_value=log_value, err_estimate=err_scaled)


def _omega_two_route(k: int, xi: float, q: Optional[QuadratureSpec] = None) -> float:
    # Difference-of-two-integrals form of the same correlation; used as an
    # internal consistency check against omega_f.
    pre = _safe_exp(_log_prefactor(k, xi))
    return pre * ((xi + 2.0) * integral_I(xi, k, q) - xi * integral_I(-(2.0 + xi), k, q))


def omega_asymptotic(k: int, xi: float) -> float:
    """Large-k law for the correlation: (1/k)-decay times (2/(1+xi))^(4k)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    xi = float(xi)
    if xi <= 0.0:
        raise ValueError(f"need xi > 0, got {xi}")
    logv = (
        -math.log(math.pi)
        - 2.0 * math.log1p(xi)
        - 0.5 * (math.log(xi) + math.log(2.0 + xi))
        - math.log(k)
        + 4.0 * k * (math.log(2.0) - math.log1p(xi))
    )
    return _safe_exp(logv)


def distance_law_check(k: int, q: Optional[QuadratureSpec] = None) -> float:
    """Correlation times 4*pi*sqrt(3)*k; approaches 1 as k grows.

    The gap sits at Euclidean distance sqrt(3)*k from the free boundary,
    so this normalizes the inverse-distance law to a dimensionless check.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    cv = omega_f(k, 1.0, q)
    return math.exp(cv.log_value + math.log(4.0 * math.pi * math.sqrt(3.0) * k))


def decay_ratio_check(k: int, q: Optional[QuadratureSpec] = None) -> float:
    """k times the relative step-down of the correlation; approaches -1."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    lo = omega_f(k, 1.0, q)
    hi = omega_f(k + 1, 1.0, q)
    return k * (math.exp(hi.log_value - lo.log_value) - 1.0)


def integral_difference(k: int, q: Optional[QuadratureSpec] = None) -> float:
    """3*I(1, k) - I(-3, k), the combination driving the decay ratio."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return 3.0 * integral_I(1.0, k, q) - integral_I(-3.0, k, q)


def _summand_step(n: int, k: int, p: int, qd: int, l: int) -> Fraction:
    # Ratio F(n, l+1) / F(n, l) of successive summands, with beta_n = p/qd.
    num = (l - 2 * n) * (2 * l + 1) * (l - n + k + 1) ** 2 * (p * n + qd * l)
    den = (l + 1) * (2 * l - 4 * n + 1) * (l - n - k) ** 2 * (p * n + qd * l + qd)
    return Fraction(num, den)


def f5_4_partial(n: int, k: int, beta_n: Rational) -> Fraction:
    """Exact terminating hypergeometric sum over l = 0 .. n-k-1.

    The summand has F(n, 0) = 1 and the rational term ratio encoded in
    _summand_step; beta_n may be any rational that keeps the denominator
    parameter off 0, i.e. beta_n != -l/n for l in range.
    """
    if not 0 <= k < n:
        raise ValueError(f"need n > k >= 0, got n = {n}, k = {k}")
    beta_n = Fraction(beta_n)
    p, qd = beta_n.numerator, beta_n.denominator
    if p <= 0:
        hit = -p * n
        if hit % qd == 0 and 0 <= hit // qd <= n - k - 1:
            raise SingularParameter(f"denominator parameter vanishes at l = {hit // qd}")
    # Single running term and a sum kept over the term's denominator;
    # everything stays in integers until the final reduction.
    term_num = 1
    term_den = 1
    total = 1
    for l in range(n - k - 1):
        a = (l - 2 * n) * (2 * l + 1) * (l - n + k + 1) ** 2 * (p * n + qd * l)
        b = (l + 1) * (2 * l - 4 * n + 1) * (l - n - k) ** 2 * (p * n + qd * l + qd)
        term_num *= a
        term_den *= b
        total = total * b + term_num
    return Fraction(total, term_den)
