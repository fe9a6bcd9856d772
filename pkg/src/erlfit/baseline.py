"""Rayleigh-Lomax baseline distribution.

Three positive parameters theta (scale/shift), lam (power) and beta
(rate).  With v = (theta + x) / theta the cdf on the support x > -theta
is

    K(x) = 1 - exp(-(beta / 2) * v**(2 * lam))

so T = (beta / 2) * v**(2*lam) is a unit exponential variate and every
closed form below follows from that transform.  At theta = 1, lam = 0.5,
beta = 2 the law collapses to a unit exponential shifted to start at -1,
which the tests lean on heavily.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import log_gamma


@dataclass(frozen=True)
class BaselineParams:
    """Parameter triple (theta, lam, beta), all strictly positive."""

    theta: float
    lam: float
    beta: float

    def __post_init__(self):
        for name in ("theta", "lam", "beta"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"BaselineParams.{name} must be a finite positive number")


def _rel_offset(x, p: BaselineParams):
    """v = (theta + x) / theta, clipped to 0 outside the support."""
    x = np.asarray(x, dtype=np.float64)
    return np.maximum((p.theta + x) / p.theta, 0.0)


def _exponent(v, p: BaselineParams):
    """T = (beta / 2) * v**(2 lam); the unit-exponential transform."""
    with np.errstate(divide="ignore", over="ignore"):
        return 0.5 * p.beta * np.power(v, 2.0 * p.lam)


def baseline_cdf(x, p: BaselineParams):
    """K(x); 0 at and below -theta."""
    scalar = np.ndim(x) == 0
    v = _rel_offset(x, p)
    t = _exponent(v, p)
    out = np.where(v > 0.0, -np.expm1(-t), 0.0)
    return float(out[()]) if scalar else out


def baseline_pdf(x, p: BaselineParams):
    """Density k(x) = (beta lam / theta) v**(2 lam - 1) exp(-T); 0 outside."""
    scalar = np.ndim(x) == 0
    v = _rel_offset(x, p)
    inside = v > 0.0
    out = np.where(inside, np.exp(_log_pdf_v(np.where(inside, v, 1.0), p)), 0.0)
    return float(out[()]) if scalar else out


def _log_pdf_v(v, p: BaselineParams):
    """ln k at v = (theta + x)/theta > 0; -inf where the density is 0."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return (
            math.log(p.beta * p.lam / p.theta)
            + (2.0 * p.lam - 1.0) * np.log(v)
            - _exponent(v, p)
        )


def _quantile_v(prob, p: BaselineParams):
    """v such that K(theta (v - 1)) = prob, for prob in [0, 1)."""
    prob = np.asarray(prob, dtype=np.float64)
    return np.power(-(2.0 / p.beta) * np.log1p(-prob), 0.5 / p.lam)


def baseline_quantile(prob, p: BaselineParams):
    """Inverse cdf: theta * (-(2/beta) ln(1-prob))**(1/(2 lam)) - theta.

    prob = 1 maps to +inf; values outside [0, 1] are a domain error.
    """
    scalar = np.ndim(prob) == 0
    pa = np.asarray(prob, dtype=np.float64)
    if pa.size and (np.any(pa < 0.0) or np.any(pa > 1.0) or not np.all(np.isfinite(pa))):
        raise ValueError("baseline_quantile requires prob in [0, 1]")
    with np.errstate(divide="ignore"):
        out = np.where(pa == 1.0, np.inf, p.theta * _quantile_v(pa, p) - p.theta)
    return float(out[()]) if scalar else out


def baseline_moment_series(r: int, p: BaselineParams) -> float:
    """Closed-form r-th raw moment via the binomial/gamma series.

    E[X^r] = sum_h C(r,h) theta^h (2/beta)^(h/(2 lam)) (-theta)^(r-h)
             * Gamma(h/(2 lam) + 1)
    """
    if not isinstance(r, (int, np.integer)) or r < 0:
        raise ValueError("moment order r must be a nonnegative integer")
    if r == 0:
        return 1.0
    total = 0.0
    for h in range(int(r) + 1):
        g = math.exp(log_gamma(h / (2.0 * p.lam) + 1.0))
        total += (
            math.comb(int(r), h)
            * p.theta**h
            * (2.0 / p.beta) ** (h / (2.0 * p.lam))
            * (-p.theta) ** (int(r) - h)
            * g
        )
    return total


def baseline_sample(n: int, p: BaselineParams, seed) -> np.ndarray:
    """n inverse-transform draws, deterministic per seed."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("sample size n must be a positive integer")
    rng = np.random.default_rng(seed)
    return baseline_quantile(rng.random(int(n)), p)
