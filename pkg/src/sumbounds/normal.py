"""Standard normal CDF, density and quantile.

All three accept scalars or arrays and return the same shape. Inputs are
standardised by the caller: pass ``(x - mu) / sigma``.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels

INV_SQRT2PI = 1.0 / math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class NormalMarginal:
    """Normal law with location ``mu`` and scale ``sigma`` (> 0)."""

    mu: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise ValueError(f"mu and sigma must be finite, got {self.mu!r}, {self.sigma!r}")
        if self.sigma <= 0.0:
            raise ValueError(f"sigma must be > 0, got {self.sigma!r}")

    def cdf(self, x):
        return phi_cdf((np.asarray(x, dtype=np.float64) - self.mu) / self.sigma)

    def ppf(self, p):
        return self.mu + self.sigma * phi_inv(p)


def _as_flat(a):
    arr = np.asarray(a, dtype=np.float64)
    return arr, np.ascontiguousarray(arr.ravel())


def _restore(out, shape):
    if shape == ():
        return float(out[0])
    return out.reshape(shape)


def phi_cdf(t):
    """Standard normal CDF, exact 0/1 beyond |t| > 38."""
    arr, flat = _as_flat(t)
    if np.isnan(flat).any():
        raise ValueError("phi_cdf: NaN input")
    return _restore(kernels.phi_cdf(flat), arr.shape)


def phi_pdf(t):
    arr = np.asarray(t, dtype=np.float64)
    if np.isnan(arr).any():
        raise ValueError("phi_pdf: NaN input")
    out = INV_SQRT2PI * np.exp(-0.5 * arr * arr)
    return float(out) if out.ndim == 0 else out


def phi_inv(p):
    """Standard normal quantile for 0 < p < 1.

    Rational initial guess refined by two Halley steps. The lower tail is
    solved directly and reflected, so ``phi_inv(1 - p) == -phi_inv(p)``.
    """
    arr, flat = _as_flat(p)
    if not np.all((flat > 0.0) & (flat < 1.0)):
        raise ValueError("phi_inv: p must lie strictly inside (0, 1)")
    return _restore(kernels.phi_inv(flat), arr.shape)
