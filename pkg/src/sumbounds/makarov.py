"""Best-possible bounds on P(X + Y <= z) for normal X, Y with unknown dependence.

For every coupling of the two marginals,

    sup_x W(F(x), G(z - x))  <=  P(X + Y <= z)  <=  inf_x W~(F(x), G(z - x))

with W(u, v) = max(u + v - 1, 0) and W~(u, v) = min(u + v, 1).  Writing
psi(x) = F(x) + G(z - x), both extremes are attained at the stationary points
of psi, where the two normal densities cross.  Taking logs of that crossing
condition gives a quadratic in x (linear when the scales are equal), so the
bounds reduce to two CDF evaluations per z.

``grid_oracle`` evaluates the same sup/inf by brute force for arbitrary
marginal CDFs and serves as the independent check on the closed forms.
"""
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import kernels
from .normal import NormalMarginal, phi_cdf, phi_pdf

SIGMA_REL_TOL = 1e-12
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class DegenerateBetaError(ValueError):
    """Equal scales and z == mu_x + mu_y: psi' vanishes nowhere or everywhere."""


@dataclass(frozen=True)
class SumProblem:
    x: NormalMarginal
    y: NormalMarginal

    @classmethod
    def from_params(cls, mu_x, sigma_x, mu_y, sigma_y):
        return cls(NormalMarginal(mu_x, sigma_x), NormalMarginal(mu_y, sigma_y))

    @property
    def mu_sum(self):
        return self.x.mu + self.y.mu

    @property
    def equal_sigma(self):
        sx, sy = self.x.sigma, self.y.sigma
        return abs(sx - sy) <= SIGMA_REL_TOL * max(sx, sy)


@dataclass(frozen=True)
class QuadraticCoefficients:
    """Coefficients of ``alpha*x**2 + beta*x + gamma = 0`` locating psi's extrema."""

    alpha: float
    beta: float
    gamma: float
    discriminant: float
    is_linear: bool


class BoundPoint(NamedTuple):
    z: float
    lower: float
    upper: float


@dataclass(frozen=True)
class BoundCurve:
    """Bounds sampled on a strictly increasing grid (parallel arrays)."""

    z: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __len__(self):
        return self.z.shape[0]

    @property
    def points(self):
        return [BoundPoint(float(a), float(b), float(c))
                for a, b, c in zip(self.z, self.lower, self.upper)]


def _check_finite(**values):
    for name, v in values.items():
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


def psi_eval(problem: SumProblem, z: float, x: float) -> float:
    """F_X(x) + F_Y(z - x)."""
    _check_finite(z=z, x=x)
    px, py = problem.x, problem.y
    return phi_cdf((x - px.mu) / px.sigma) + phi_cdf((z - x - py.mu) / py.sigma)


def psi_derivative(problem: SumProblem, z: float, x: float) -> float:
    """d/dx psi: difference of the two marginal densities at x and z - x."""
    _check_finite(z=z, x=x)
    px, py = problem.x, problem.y
    return (phi_pdf((x - px.mu) / px.sigma) / px.sigma
            - phi_pdf((z - x - py.mu) / py.sigma) / py.sigma)


def quadratic_coefficients(problem: SumProblem, z: float) -> QuadraticCoefficients:
    _check_finite(z=z)
    mx, sx = problem.x.mu, problem.x.sigma
    my, sy = problem.y.mu, problem.y.sigma
    m = z - my
    linear = problem.equal_sigma
    alpha = 0.0 if linear else 1.0 / (2.0 * sx * sx) - 1.0 / (2.0 * sy * sy)
    log_ratio = 0.0 if linear else math.log(sy / sx)
    beta = m / (sy * sy) - mx / (sx * sx)
    gamma = -(m * m) / (2.0 * sy * sy) + (mx * mx) / (2.0 * sx * sx) - log_ratio
    # beta^2 - 4*alpha*gamma rearranged without cancellation; alpha and the
    # log-ratio share a sign, so this is strictly positive when alpha != 0.
    disc = (m - mx) ** 2 / (sx * sx * sy * sy) + 4.0 * alpha * log_ratio
    return QuadraticCoefficients(alpha, beta, gamma, disc, linear)


def _quadratic_roots(alpha, beta, gamma, disc):
    """Both roots, ascending, elementwise. Requires alpha != 0 and disc > 0."""
    q = -0.5 * (beta + np.copysign(np.sqrt(disc), beta))
    r1 = q / alpha
    r2 = gamma / q
    return np.minimum(r1, r2), np.maximum(r1, r2)


def critical_points(problem: SumProblem, z: float) -> tuple:
    """Stationary points of psi, ascending.

    One point for equal scales, two otherwise.  Raises
    ``DegenerateBetaError`` for equal scales at z == mu_x + mu_y.
    """
    c = quadratic_coefficients(problem, z)
    if c.is_linear:
        if c.beta == 0.0:
            raise DegenerateBetaError(
                "equal scales with z == mu_x + mu_y: psi is constant, no isolated extremum")
        return ((z - problem.y.mu + problem.x.mu) / 2.0,)
    lo, hi = _quadratic_roots(c.alpha, c.beta, c.gamma, c.discriminant)
    return (float(lo), float(hi))


def _bounds_array(problem: SumProblem, z: np.ndarray):
    mx, sx = problem.x.mu, problem.x.sigma
    my, sy = problem.y.mu, problem.y.sigma
    if problem.equal_sigma:
        sigma = 0.5 * (sx + sy)
        t = (z - mx - my) / (2.0 * sigma)
        above = z >= problem.mu_sum
        lower = np.where(above & (z > problem.mu_sum), 1.0 - 2.0 * phi_cdf(-t), 0.0)
        upper = np.where(above, 1.0, 2.0 * phi_cdf(t))
        return np.clip(lower, 0.0, 1.0), np.clip(upper, 0.0, 1.0)

    m = z - my
    log_ratio = math.log(sy / sx)
    alpha = 1.0 / (2.0 * sx * sx) - 1.0 / (2.0 * sy * sy)
    beta = m / (sy * sy) - mx / (sx * sx)
    gamma = -(m * m) / (2.0 * sy * sy) + (mx * mx) / (2.0 * sx * sx) - log_ratio
    disc = (m - mx) ** 2 / (sx * sx * sy * sy) + 4.0 * alpha * log_ratio
    x1, x2 = _quadratic_roots(alpha, beta, gamma, disc)

    a1, b1 = (x1 - mx) / sx, (z - x1 - my) / sy
    a2, b2 = (x2 - mx) / sx, (z - x2 - my) / sy
    psi1 = phi_cdf(a1) + phi_cdf(b1)
    psi2 = phi_cdf(a2) + phi_cdf(b2)
    # ties go to x1
    max_at_1 = psi1 >= psi2
    min_at_1 = psi1 <= psi2
    # psi - 1 written as F(a) - (1 - F(b)) keeps tiny lower bounds accurate
    excess1 = phi_cdf(a1) - phi_cdf(-b1)
    excess2 = phi_cdf(a2) - phi_cdf(-b2)
    lower = np.maximum(np.where(max_at_1, excess1, excess2), 0.0)
    upper = np.minimum(np.where(min_at_1, psi1, psi2), 1.0)
    return np.clip(lower, 0.0, 1.0), np.clip(upper, 0.0, 1.0)


def bounds(problem: SumProblem, z: float) -> BoundPoint:
    _check_finite(z=z)
    lo, up = _bounds_array(problem, np.array([z], dtype=np.float64))
    return BoundPoint(float(z), float(lo[0]), float(up[0]))


def lower_bound(problem: SumProblem, z: float) -> float:
    """Smallest possible P(X + Y <= z) over all dependence structures."""
    return bounds(problem, z).lower


def upper_bound(problem: SumProblem, z: float) -> float:
    """Largest possible P(X + Y <= z) over all dependence structures."""
    return bounds(problem, z).upper


def bound_curve(problem: SumProblem, z_grid) -> BoundCurve:
    z = np.asarray(z_grid, dtype=np.float64).ravel()
    if z.size == 0:
        raise ValueError("z_grid is empty")
    if not np.all(np.isfinite(z)):
        raise ValueError("z_grid contains non-finite values")
    if np.any(np.diff(z) <= 0.0):
        raise ValueError("z_grid must be strictly increasing")
    lower, upper = _bounds_array(problem, z)
    return BoundCurve(z, lower, upper)


# -- brute-force oracle ------------------------------------------------------

def default_oracle_range(problem: SumProblem, z: float, width: float = 10.0):
    """x-window covering both marginal centres plus ``width`` of the larger scale."""
    spread = width * max(problem.x.sigma, problem.y.sigma)
    centres = (problem.x.mu, z - problem.y.mu)
    return min(centres) - spread, max(centres) + spread


def _oracle_grid(x_lo, x_hi, step):
    if not (math.isfinite(x_lo) and math.isfinite(x_hi)):
        raise ValueError("grid ends must be finite")
    if not step > 0.0:
        raise ValueError(f"step must be > 0, got {step!r}")
    if x_lo > x_hi:
        raise ValueError("empty grid: x_lo > x_hi")
    n = int(math.ceil((x_hi - x_lo) / step)) + 1
    return np.linspace(x_lo, x_hi, n)


def _golden(f, a, b, maximize, iters=60):
    sign = -1.0 if maximize else 1.0
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = sign * f(c), sign * f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = sign * f(d)
    return sign * min(fc, fd)


def _refine(f, xs, i, best, maximize):
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, xs.shape[0] - 1)]
    if b <= a:
        return best
    v = _golden(f, a, b, maximize)
    return max(best, v) if maximize else min(best, v)


def grid_oracle(f_cdf: Callable, g_cdf: Callable, z: float, x_lo: float, x_hi: float,
                step: float, refine: bool = True):
    """Brute-force (lower, upper) bounds for X + Y at ``z`` from any two CDFs.

    ``f_cdf`` and ``g_cdf`` must accept numpy arrays.  The extremes of
    F(x) + G(z - x) are located on the grid and, with ``refine``, polished by
    a golden-section pass over the neighbouring cells.  Refinement only ever
    tightens the result since every probed x is admissible.
    """
    _check_finite(z=z)
    xs = _oracle_grid(x_lo, x_hi, step)
    s = np.asarray(f_cdf(xs), dtype=np.float64) + np.asarray(g_cdf(z - xs), dtype=np.float64)
    i_max, i_min = int(np.argmax(s)), int(np.argmin(s))
    s_max, s_min = float(s[i_max]), float(s[i_min])
    if refine:
        def psi(x):
            return float(f_cdf(np.array([x]))[0] + g_cdf(np.array([z - x]))[0])
        s_max = _refine(psi, xs, i_max, s_max, True)
        s_min = _refine(psi, xs, i_min, s_min, False)
    return max(s_max - 1.0, 0.0), min(s_min, 1.0)


def normal_grid_oracle(problem: SumProblem, z: float, step: float = 1e-4,
                       x_lo: float = None, x_hi: float = None, refine: bool = True):
    """``grid_oracle`` specialised to normal marginals, using the compiled sweep."""
    _check_finite(z=z)
    if x_lo is None or x_hi is None:
        d_lo, d_hi = default_oracle_range(problem, z)
        x_lo = d_lo if x_lo is None else x_lo
        x_hi = d_hi if x_hi is None else x_hi
    xs = _oracle_grid(x_lo, x_hi, step)
    px, py = problem.x, problem.y
    s_max, i_max, s_min, i_min = kernels.psi_extrema(px.mu, px.sigma, py.mu, py.sigma,
                                                     float(z), xs)
    if refine:
        def psi(x):
            return psi_eval(problem, z, x)
        s_max = _refine(psi, xs, i_max, float(s_max), True)
        s_min = _refine(psi, xs, i_min, float(s_min), False)
    return max(float(s_max) - 1.0, 0.0), min(float(s_min), 1.0)
