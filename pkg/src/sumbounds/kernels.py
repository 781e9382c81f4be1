"""Hot numeric kernels, dispatched to numba or numpy (see ``_backend``)."""
from ._backend import BACKEND, USE_NUMBA

if USE_NUMBA:
    from ._kernels_numba import (
        clayton_from_frailty,
        ecdf_at,
        gamma_mt_candidates,
        gumbel_from_frailty,
        phi_cdf,
        phi_inv,
        positive_stable,
        psi_extrema,
    )
else:
    from ._kernels_numpy import (
        clayton_from_frailty,
        ecdf_at,
        gamma_mt_candidates,
        gumbel_from_frailty,
        phi_cdf,
        phi_inv,
        positive_stable,
        psi_extrema,
    )

__all__ = [
    "BACKEND",
    "clayton_from_frailty",
    "ecdf_at",
    "gamma_mt_candidates",
    "gumbel_from_frailty",
    "phi_cdf",
    "phi_inv",
    "positive_stable",
    "psi_extrema",
]
