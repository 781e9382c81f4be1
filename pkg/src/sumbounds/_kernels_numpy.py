"""Vectorised numpy kernels. Same names and semantics as ``_kernels_numba``."""
import numpy as np
from scipy.special import erfc

SQRT2 = np.sqrt(2.0)
SQRT2PI = np.sqrt(2.0 * np.pi)
SATURATE = 38.0

# Acklam's rational approximation to the normal quantile (rel. error ~1.2e-9).
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
P_LOW = 0.02425


def phi_cdf(t):
    t = np.asarray(t, dtype=np.float64)
    out = 0.5 * erfc(-t / SQRT2)
    out = np.where(t > SATURATE, 1.0, out)
    return np.where(t < -SATURATE, 0.0, out)


def _initial_lower(q):
    # q in (0, 0.5]; returns a guess <= 0
    x = np.empty_like(q)
    tail = q < P_LOW
    r = np.sqrt(-2.0 * np.log(q[tail]))
    num = ((((_C[0] * r + _C[1]) * r + _C[2]) * r + _C[3]) * r + _C[4]) * r + _C[5]
    den = (((_D[0] * r + _D[1]) * r + _D[2]) * r + _D[3]) * r + 1.0
    x[tail] = num / den
    mid = ~tail
    r = q[mid] - 0.5
    s = r * r
    num = (((((_A[0] * s + _A[1]) * s + _A[2]) * s + _A[3]) * s + _A[4]) * s + _A[5]) * r
    den = ((((_B[0] * s + _B[1]) * s + _B[2]) * s + _B[3]) * s + _B[4]) * s + 1.0
    x[mid] = num / den
    return x


def phi_inv(p):
    p = np.asarray(p, dtype=np.float64)
    upper = p > 0.5
    q = np.where(upper, 1.0 - p, p)
    x = _initial_lower(q)
    for _ in range(2):
        ok = x > -37.0
        e = phi_cdf(x) - q
        u = e * SQRT2PI * np.exp(0.5 * x * x)
        step = u / (1.0 + 0.5 * x * u)
        x = np.where(ok, x - step, x)
    return np.where(upper, -x, x)


def psi_extrema(mu_x, sigma_x, mu_y, sigma_y, z, xs):
    """Return (max, argmax, min, argmin) of psi over the points ``xs``."""
    psi = phi_cdf((xs - mu_x) / sigma_x) + phi_cdf((z - xs - mu_y) / sigma_y)
    i_max = int(np.argmax(psi))
    i_min = int(np.argmin(psi))
    return psi[i_max], i_max, psi[i_min], i_min


def gamma_mt_candidates(shape, normals, uniforms):
    """Marsaglia-Tsang candidates for Gamma(shape >= 1).

    Returns candidate values and the acceptance mask; accepted values in
    order form the gamma sample stream.
    """
    d = shape - 1.0 / 3.0
    c = 1.0 / np.sqrt(9.0 * d)
    v = 1.0 + c * normals
    positive = v > 0.0
    v3 = np.where(positive, v * v * v, 1.0)
    with np.errstate(divide="ignore"):
        log_u = np.log(uniforms)
    accept = positive & (log_u < 0.5 * normals * normals + d - d * v3 + d * np.log(v3))
    return d * v3, accept


def positive_stable(alpha, angles, w):
    """Kanter's representation of a positive stable law, index ``alpha``."""
    a = np.sin(alpha * angles) / np.sin(angles) ** (1.0 / alpha)
    b = (np.sin((1.0 - alpha) * angles) / w) ** ((1.0 - alpha) / alpha)
    return a * b


def clayton_from_frailty(e, log_v, theta):
    # (1 + e/v)^(-1/theta), evaluated in log space
    with np.errstate(divide="ignore"):
        s = np.log(e) - log_v
    return np.exp(-np.logaddexp(0.0, s) / theta)


def gumbel_from_frailty(e, s, theta):
    return np.exp(-((e / s) ** (1.0 / theta)))


def ecdf_at(sorted_samples, grid):
    idx = np.searchsorted(sorted_samples, grid, side="right")
    return idx / sorted_samples.shape[0]
