"""Copula envelopes, Clayton/Gumbel/Gaussian copulas and their samplers."""
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import integrate

from . import kernels
from .normal import phi_cdf, phi_inv
from .rng import RandomStream

GAUSSIAN, CLAYTON, GUMBEL = "gaussian", "clayton", "gumbel"
KINDS = (GAUSSIAN, CLAYTON, GUMBEL)

# keeps normal scores finite when a sampler rounds to exactly 0 or 1
_U_MIN = 1e-300
_U_MAX = 1.0 - 2.0 ** -53


class UnitPair(NamedTuple):
    u: float
    v: float


@dataclass(frozen=True)
class DependenceModel:
    """Dependence structure: Gaussian(rho), Clayton(theta) or Gumbel(theta)."""

    kind: str
    parameter: float

    def __post_init__(self):
        k, p = self.kind, self.parameter
        if k not in KINDS:
            raise ValueError(f"unknown dependence kind {k!r}; expected one of {KINDS}")
        if not math.isfinite(p):
            raise ValueError(f"{k} parameter must be finite, got {p!r}")
        if k == GAUSSIAN and not -1.0 <= p <= 1.0:
            raise ValueError(f"gaussian rho must lie in [-1, 1], got {p}")
        if k == CLAYTON and not p > 0.0:
            raise ValueError(f"clayton theta must be > 0, got {p}")
        if k == GUMBEL and not p >= 1.0:
            raise ValueError(f"gumbel theta must be >= 1, got {p}")

    @classmethod
    def gaussian(cls, rho):
        return cls(GAUSSIAN, float(rho))

    @classmethod
    def clayton(cls, theta):
        return cls(CLAYTON, float(theta))

    @classmethod
    def gumbel(cls, theta):
        return cls(GUMBEL, float(theta))

    @classmethod
    def parse(cls, text):
        """Parse ``kind:param``, e.g. ``clayton:2.5``."""
        kind, sep, param = text.strip().partition(":")
        if not sep:
            raise ValueError(f"model must look like kind:param, got {text!r}")
        try:
            value = float(param)
        except ValueError:
            raise ValueError(f"bad model parameter in {text!r}") from None
        return cls(kind.strip().lower(), value)

    @property
    def label(self):
        return f"{self.kind}:{self.parameter:g}"


def _check_unit(u, v):
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if not (np.all((u >= 0.0) & (u <= 1.0)) and np.all((v >= 0.0) & (v <= 1.0))):
        raise ValueError("copula arguments must lie in [0, 1]")
    return u, v


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def frechet_lower(u, v):
    """W(u, v) = max(u + v - 1, 0), the countermonotone copula."""
    u, v = _check_unit(u, v)
    # exact when either argument is 1
    return _scalar_or_array(np.maximum(np.minimum(u, v) - (1.0 - np.maximum(u, v)), 0.0))


def frechet_upper(u, v):
    """M(u, v) = min(u, v), the comonotone copula."""
    u, v = _check_unit(u, v)
    return _scalar_or_array(np.minimum(u, v))


def dual_w(u, v):
    """min(u + v, 1); its infimum along x + y = z gives the upper sum bound."""
    u, v = _check_unit(u, v)
    return _scalar_or_array(np.minimum(u + v, 1.0))


def _clayton_cdf(u, v, theta):
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        s = u ** -theta + v ** -theta - 1.0
        c = s ** (-1.0 / theta)
    return np.where((u == 0.0) | (v == 0.0), 0.0, c)


def _gumbel_cdf(u, v, theta):
    with np.errstate(divide="ignore", invalid="ignore"):
        s = (-np.log(u)) ** theta + (-np.log(v)) ** theta
        c = np.exp(-s ** (1.0 / theta))
    return np.where((u == 0.0) | (v == 0.0), 0.0, c)


def _gaussian_cdf_scalar(u, v, rho):
    if u == 0.0 or v == 0.0:
        return 0.0
    if u == 1.0:
        return v
    if v == 1.0:
        return u
    if rho == 1.0:
        return min(u, v)
    if rho == -1.0:
        return max(u + v - 1.0, 0.0)
    b = phi_inv(v)
    r = math.sqrt(1.0 - rho * rho)

    def integrand(t):
        return phi_cdf((b - rho * phi_inv(t)) / r)

    val, _ = integrate.quad(integrand, 0.0, u, epsabs=1e-10, epsrel=1e-10, limit=200)
    return min(max(val, max(u + v - 1.0, 0.0)), min(u, v))


def copula_cdf(model: DependenceModel, u, v):
    """C(u, v) for the given dependence model.

    The Gaussian kind integrates the conditional normal law numerically and
    is meant for checks, not hot paths.
    """
    u, v = _check_unit(u, v)
    if model.kind == CLAYTON:
        out = _clayton_cdf(u, v, model.parameter)
    elif model.kind == GUMBEL:
        out = _gumbel_cdf(u, v, model.parameter)
    else:
        uu, vv = np.broadcast_arrays(u, v)
        out = np.array([_gaussian_cdf_scalar(float(a), float(b), model.parameter)
                        for a, b in zip(uu.ravel(), vv.ravel())]).reshape(uu.shape)
    return _scalar_or_array(out)


def kendall_tau(model: DependenceModel):
    """Population Kendall's tau of the model."""
    p = model.parameter
    if model.kind == CLAYTON:
        return p / (p + 2.0)
    if model.kind == GUMBEL:
        return 1.0 - 1.0 / p
    return 2.0 / math.pi * math.asin(p)


# -- sampling ----------------------------------------------------------------

def log_gamma_variates(rng: RandomStream, shape: float, n: int):
    """log of n Gamma(shape, 1) draws.

    Marsaglia-Tsang for shape >= 1; below 1 the draw is boosted from
    Gamma(shape + 1) times U**(1/shape), applied in log space so tiny
    shapes do not underflow.
    """
    if not shape > 0.0:
        raise ValueError(f"gamma shape must be > 0, got {shape}")
    base = shape if shape >= 1.0 else shape + 1.0
    parts = []
    have = 0
    while have < n:
        m = (n - have) + (n - have) // 8 + 64
        values, accept = kernels.gamma_mt_candidates(base, rng.normal(m), rng.uniform(m))
        got = values[accept]
        parts.append(got)
        have += got.shape[0]
    log_g = np.log(np.concatenate(parts)[:n])
    if shape < 1.0:
        log_g = log_g + np.log(rng.uniform_open(n)) / shape
    return log_g


def _sample_clayton(theta, rng, n):
    log_v = log_gamma_variates(rng, 1.0 / theta, n)
    e1 = rng.exponential(n)
    e2 = rng.exponential(n)
    return (kernels.clayton_from_frailty(e1, log_v, theta),
            kernels.clayton_from_frailty(e2, log_v, theta))


def _sample_gumbel(theta, rng, n):
    alpha = 1.0 / theta
    s = kernels.positive_stable(alpha, math.pi * rng.uniform_open(n), rng.exponential(n))
    e1 = rng.exponential(n)
    e2 = rng.exponential(n)
    return (kernels.gumbel_from_frailty(e1, s, theta),
            kernels.gumbel_from_frailty(e2, s, theta))


def _gaussian_scores(rho, rng, n):
    a = rng.normal(n)
    if rho == 1.0:
        return a, a.copy()
    if rho == -1.0:
        return a, -a
    return a, rho * a + math.sqrt(1.0 - rho * rho) * rng.normal(n)


def sample_pairs(model: DependenceModel, rng: RandomStream, n: int):
    """n draws (u, v) from the model's copula, as two arrays."""
    if model.kind == CLAYTON:
        return _sample_clayton(model.parameter, rng, n)
    if model.kind == GUMBEL:
        return _sample_gumbel(model.parameter, rng, n)
    a, b = _gaussian_scores(model.parameter, rng, n)
    u = phi_cdf(a)
    if model.parameter == 1.0:
        return u, u.copy()
    if model.parameter == -1.0:
        return u, 1.0 - u
    return u, phi_cdf(b)


def sample_pair(model: DependenceModel, rng: RandomStream) -> UnitPair:
    u, v = sample_pairs(model, rng, 1)
    return UnitPair(float(u[0]), float(v[0]))


def _scores(model, rng, n):
    if model.kind == GAUSSIAN:
        return _gaussian_scores(model.parameter, rng, n)
    u, v = sample_pairs(model, rng, n)
    return (phi_inv(np.clip(u, _U_MIN, _U_MAX)), phi_inv(np.clip(v, _U_MIN, _U_MAX)))


def sample_sums(model: DependenceModel, problem, rng: RandomStream, n: int):
    """n draws of X + Y with normal marginals coupled by ``model``.

    Gaussian models use the normal scores directly, which is the same law
    as mapping the copula pair through the quantile function and avoids a
    lossy round trip; |rho| = 1 is the exact (counter)monotone construction.
    """
    a, b = _scores(model, rng, n)
    px, py = problem.x, problem.y
    return (px.mu + px.sigma * a) + (py.mu + py.sigma * b)


def sample_sum(model: DependenceModel, problem, rng: RandomStream) -> float:
    return float(sample_sums(model, problem, rng, 1)[0])


def gaussian_sum_cdf(problem, rho: float, z):
    """Exact P(X + Y <= z) when (X, Y) is bivariate normal with correlation rho."""
    if not -1.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [-1, 1], got {rho}")
    sx, sy = problem.x.sigma, problem.y.sigma
    s = math.sqrt((sx + rho * sy) ** 2 + (1.0 - rho * rho) * sy * sy)
    z = np.asarray(z, dtype=np.float64)
    if s == 0.0:
        out = np.where(z >= problem.mu_sum, 1.0, 0.0)
    else:
        out = phi_cdf((z - problem.mu_sum) / s)
    return _scalar_or_array(out)
