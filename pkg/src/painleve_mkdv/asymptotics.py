"""Asymptotic models for v(x; alpha, k) on both ends of the real line, with
analytic derivatives, plus the log-log slope fit used to verify remainder
orders.

The oscillatory model lives on s = -x > 0:

    v(x) ~ d s^{-1/4} cos(PsiTilde(s)) + alpha/x,
    PsiTilde(s) = (2/3) s^{3/2} - (3/4) d^2 ln s + phi,

and the decaying model on x > 0 is v(x) ~ alpha/x + 2 alpha (1-alpha^2) x^{-4}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .stokes import ASParams, ConnectionConstants

__all__ = [
    "OscillatoryModel",
    "psi_tilde",
    "psi_stationary_threshold",
    "v_neg_asym",
    "v_pos_asym",
    "loglog_slope",
]


@dataclass(frozen=True)
class OscillatoryModel:
    d: float
    phi: float
    alpha: float


def psi_tilde(s, c: ConnectionConstants):
    """Phase PsiTilde(s) and its s-derivative, s > 0.

    PsiTilde'(s) = s^{1/2} - (3/4) d^2 / s.
    """
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0):
        raise DomainError("psi_tilde requires s > 0")
    d2 = c.d * c.d
    value = (2.0 / 3.0) * s ** 1.5 - 0.75 * d2 * np.log(s) + c.phi
    deriv = np.sqrt(s) - 0.75 * d2 / s
    if value.ndim == 0:
        return float(value), float(deriv)
    return value, deriv


def psi_stationary_threshold(d: float) -> float:
    """Largest s at which PsiTilde' can vanish: s0 = ((3/4) d^2)^{2/3}."""
    return (0.75 * d * d) ** (2.0 / 3.0)


def v_neg_asym(x, p: ASParams, c: ConnectionConstants, include_alpha_term: bool = True):
    """Oscillatory model of v and its exact x-derivative for x < 0.

    With s = -x:  v = d s^{-1/4} cos(PsiTilde(s)) [+ alpha/x], and
    dv/dx = -d/ds of the model, chain rule through s = -x.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x >= 0.0):
        raise DomainError("v_neg_asym requires x < 0")
    s = -x
    d2 = c.d * c.d
    psi = (2.0 / 3.0) * s ** 1.5 - 0.75 * d2 * np.log(s) + c.phi
    dpsi = np.sqrt(s) - 0.75 * d2 / s
    cos_psi = np.cos(psi)
    sin_psi = np.sin(psi)
    amp = c.d * s ** -0.25
    v = amp * cos_psi
    # d/dx [amp cos psi] = -d/ds [...] = 0.25 d s^{-5/4} cos + amp sin * dpsi
    v_prime = 0.25 * c.d * s ** -1.25 * cos_psi + amp * sin_psi * dpsi
    if include_alpha_term:
        v = v + p.alpha / x
        v_prime = v_prime - p.alpha / (x * x)
    if v.ndim == 0:
        return float(v), float(v_prime)
    return v, v_prime


def v_pos_asym(x, alpha: float):
    """Decaying model of v and its derivative for x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("v_pos_asym requires x > 0")
    a4 = 2.0 * alpha * (1.0 - alpha * alpha)
    v = alpha / x + a4 / x ** 4
    v_prime = -alpha / x ** 2 - 4.0 * a4 / x ** 5
    if v.ndim == 0:
        return float(v), float(v_prime)
    return v, v_prime


def loglog_slope(points) -> float:
    """Least-squares slope of ln(value) against ln(abscissa).

    Expects >= 5 points with positive abscissas and values; raises
    ``DomainError`` on degenerate input (coincident abscissas).
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 5:
        raise DomainError("loglog_slope needs at least 5 (abscissa, value) pairs")
    if np.any(pts <= 0.0):
        raise DomainError("loglog_slope needs positive abscissas and values")
    log_s = np.log(pts[:, 0])
    if np.ptp(log_s) == 0.0:
        raise DomainError("coincident abscissas")
    slope, _ = np.polyfit(log_s, np.log(pts[:, 1]), 1)
    return float(slope)
