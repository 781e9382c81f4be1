"""Bounds on the distribution of a sum of two dependent normal variables."""
from ._backend import BACKEND
from .copula import (
    DependenceModel,
    UnitPair,
    copula_cdf,
    dual_w,
    frechet_lower,
    frechet_upper,
    gaussian_sum_cdf,
    sample_pair,
    sample_pairs,
    sample_sum,
    sample_sums,
)
from .makarov import (
    BoundCurve,
    BoundPoint,
    DegenerateBetaError,
    QuadraticCoefficients,
    SumProblem,
    bound_curve,
    bounds,
    critical_points,
    grid_oracle,
    lower_bound,
    normal_grid_oracle,
    psi_derivative,
    psi_eval,
    quadratic_coefficients,
    upper_bound,
)
from .montecarlo import (
    ContainmentReport,
    EmpiricalCdf,
    dkw_epsilon,
    ecdf_eval,
    verify_containment,
)
from .normal import NormalMarginal, phi_cdf, phi_inv, phi_pdf
from .rng import RandomStream

__version__ = "0.1.0"
