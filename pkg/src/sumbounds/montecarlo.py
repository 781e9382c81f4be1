"""Monte-Carlo check that simulated sum distributions sit inside the bounds.

Samples are drawn in fixed-size chunks, chunk ``k`` from substream ``k``,
so results do not depend on how many workers share the chunks.
"""
import math
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .copula import DependenceModel, sample_sums
from .makarov import SumProblem, bound_curve
from .rng import RandomStream

CHUNK = 1 << 14
DEFAULT_N = 100_000
DEFAULT_DELTA = 0.01


class EmpiricalCdf:
    """Right-continuous step function of a sample."""

    def __init__(self, samples):
        s = np.sort(np.asarray(samples, dtype=np.float64).ravel())
        if s.size == 0:
            raise ValueError("EmpiricalCdf needs at least one sample")
        if np.isnan(s).any():
            raise ValueError("EmpiricalCdf samples contain NaN")
        self.sorted_samples = s

    @property
    def n(self):
        return self.sorted_samples.shape[0]

    def __call__(self, t):
        return ecdf_eval(self, t)

    def on_grid(self, grid):
        return kernels.ecdf_at(self.sorted_samples, np.ascontiguousarray(grid, dtype=np.float64))


def ecdf_eval(e: EmpiricalCdf, t: float) -> float:
    """Fraction of samples <= t."""
    return bisect_right(e.sorted_samples, t) / e.n


def dkw_epsilon(n: int, delta: float) -> float:
    """Half-width of the Dvoretzky-Kiefer-Wolfowitz band at confidence 1 - delta."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return math.sqrt(math.log(2.0 / delta) / (2.0 * n))


def default_z_grid(problem: SumProblem, points: int = 200, width: float = 4.0):
    half = width * (problem.x.sigma + problem.y.sigma)
    return np.linspace(problem.mu_sum - half, problem.mu_sum + half, points)


def draw_sums(model: DependenceModel, problem: SumProblem, n: int, seed: int, workers: int = 1):
    """n sums of X + Y under ``model``, sorted ascending."""
    sizes = [CHUNK] * (n // CHUNK)
    if n % CHUNK:
        sizes.append(n % CHUNK)

    def run(k):
        return sample_sums(model, problem, RandomStream(seed, k), sizes[k])

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, range(len(sizes))))
    else:
        chunks = [run(k) for k in range(len(sizes))]
    return np.sort(np.concatenate(chunks))


@dataclass(frozen=True)
class ContainmentReport:
    model: DependenceModel
    n: int
    epsilon: float
    max_violation_low: float
    max_violation_high: float
    passed: bool


def verify_containment(problem: SumProblem, model: DependenceModel, n: int, z_grid,
                       seed: int, delta: float = DEFAULT_DELTA, workers: int = 1,
                       upper_shift: float = 0.0) -> ContainmentReport:
    """Simulate n sums and compare their ECDF with the bounds on ``z_grid``.

    Passes when the ECDF leaves [lower, upper] by no more than the DKW
    half-width anywhere on the grid.  ``upper_shift`` lowers the upper
    bound artificially and exists only to exercise the failure path.
    """
    if n < 1000:
        raise ValueError(f"n must be >= 1000, got {n}")
    curve = bound_curve(problem, z_grid)
    ecdf = EmpiricalCdf(draw_sums(model, problem, n, seed, workers))
    f = ecdf.on_grid(curve.z)
    eps = dkw_epsilon(n, delta)
    low = max(float(np.max(curve.lower - f)), 0.0)
    high = max(float(np.max(f - (curve.upper - upper_shift))), 0.0)
    return ContainmentReport(model, n, eps, low, high, low <= eps and high <= eps)
