"""Loop kernels compiled with numba. Same names and semantics as ``_kernels_numpy``."""
import math

import numpy as np
from numba import njit

from ._kernels_numpy import _A, _B, _C, _D, P_LOW, SATURATE

SQRT2 = math.sqrt(2.0)
SQRT2PI = math.sqrt(2.0 * math.pi)

jit = njit(cache=True, nogil=True)


@jit
def _phi(t):
    if t > SATURATE:
        return 1.0
    if t < -SATURATE:
        return 0.0
    return 0.5 * math.erfc(-t / SQRT2)


@jit
def phi_cdf(t):
    out = np.empty(t.shape[0])
    for i in range(t.shape[0]):
        out[i] = _phi(t[i])
    return out


@jit
def _inv_lower(q):
    if q < P_LOW:
        r = math.sqrt(-2.0 * math.log(q))
        num = ((((_C[0] * r + _C[1]) * r + _C[2]) * r + _C[3]) * r + _C[4]) * r + _C[5]
        den = (((_D[0] * r + _D[1]) * r + _D[2]) * r + _D[3]) * r + 1.0
        x = num / den
    else:
        r = q - 0.5
        s = r * r
        num = (((((_A[0] * s + _A[1]) * s + _A[2]) * s + _A[3]) * s + _A[4]) * s + _A[5]) * r
        den = ((((_B[0] * s + _B[1]) * s + _B[2]) * s + _B[3]) * s + _B[4]) * s + 1.0
        x = num / den
    for _ in range(2):
        if x <= -37.0:
            break
        e = _phi(x) - q
        u = e * SQRT2PI * math.exp(0.5 * x * x)
        x = x - u / (1.0 + 0.5 * x * u)
    return x


@jit
def phi_inv(p):
    out = np.empty(p.shape[0])
    for i in range(p.shape[0]):
        if p[i] > 0.5:
            out[i] = -_inv_lower(1.0 - p[i])
        else:
            out[i] = _inv_lower(p[i])
    return out


@jit
def psi_extrema(mu_x, sigma_x, mu_y, sigma_y, z, xs):
    hi = -1.0
    lo = 3.0
    i_max = 0
    i_min = 0
    for i in range(xs.shape[0]):
        v = _phi((xs[i] - mu_x) / sigma_x) + _phi((z - xs[i] - mu_y) / sigma_y)
        if v > hi:
            hi = v
            i_max = i
        if v < lo:
            lo = v
            i_min = i
    return hi, i_max, lo, i_min


@jit
def gamma_mt_candidates(shape, normals, uniforms):
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    n = normals.shape[0]
    values = np.empty(n)
    accept = np.zeros(n, dtype=np.bool_)
    for i in range(n):
        x = normals[i]
        v = 1.0 + c * x
        if v <= 0.0:
            values[i] = d
            continue
        v = v * v * v
        values[i] = d * v
        log_u = math.log(uniforms[i]) if uniforms[i] > 0.0 else -math.inf
        if log_u < 0.5 * x * x + d - d * v + d * math.log(v):
            accept[i] = True
    return values, accept


@jit
def positive_stable(alpha, angles, w):
    out = np.empty(angles.shape[0])
    for i in range(angles.shape[0]):
        t = angles[i]
        a = math.sin(alpha * t) / math.sin(t) ** (1.0 / alpha)
        b = (math.sin((1.0 - alpha) * t) / w[i]) ** ((1.0 - alpha) / alpha)
        out[i] = a * b
    return out


@jit
def _log1p_exp(s):
    if s > 0.0:
        return s + math.log1p(math.exp(-s))
    return math.log1p(math.exp(s))


@jit
def clayton_from_frailty(e, log_v, theta):
    out = np.empty(e.shape[0])
    for i in range(e.shape[0]):
        if e[i] == 0.0:
            out[i] = 1.0
        else:
            out[i] = math.exp(-_log1p_exp(math.log(e[i]) - log_v[i]) / theta)
    return out


@jit
def gumbel_from_frailty(e, s, theta):
    out = np.empty(e.shape[0])
    for i in range(e.shape[0]):
        out[i] = math.exp(-((e[i] / s[i]) ** (1.0 / theta)))
    return out


@jit
def ecdf_at(sorted_samples, grid):
    return np.searchsorted(sorted_samples, grid, side="right") / sorted_samples.shape[0]
