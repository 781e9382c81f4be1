"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_backends.py [--repeat 5]

Kernel timings call both implementations directly in one process (numba
functions are compiled before timing).  The end-to-end rows run the
Figure-2 containment check in fresh interpreters with and without
SUMBOUNDS_DISABLE_NUMBA.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from sumbounds import _kernels_numpy as knp

try:
    from sumbounds import _kernels_numba as knb
except ImportError:
    knb = None

E2E = """
import time, numpy as np
from sumbounds import SumProblem, DependenceModel, verify_containment
p = SumProblem.from_params(1, 0.1, 1.5, 0.15)
z = np.linspace(1.8, 3.2, 200)
verify_containment(p, DependenceModel.clayton(2.5), 2000, z, 1)
t = time.perf_counter()
for m in (DependenceModel.clayton(2.5), DependenceModel.gumbel(2.5)):
    verify_containment(p, m, 1_000_000, z, 20240611)
print(time.perf_counter() - t)
"""


def cases(rng):
    t = rng.uniform(-8, 8, 1_000_000)
    p = rng.uniform(size=1_000_000)
    xs = np.linspace(-1.0, 4.0, 1_000_001)
    z, u = rng.standard_normal(1_000_000), rng.uniform(size=1_000_000)
    ang = np.pi * rng.uniform(1e-6, 1 - 1e-6, 1_000_000)
    w = rng.exponential(size=1_000_000) + 1e-12
    e = rng.exponential(size=1_000_000)
    log_v = np.log(rng.gamma(0.4, size=1_000_000))
    return {
        "phi_cdf (1e6)": lambda k: k.phi_cdf(t),
        "phi_inv (1e6)": lambda k: k.phi_inv(p),
        "psi_extrema (1e6 grid)": lambda k: k.psi_extrema(1.0, 0.1, 1.5, 0.15, 2.5, xs),
        "gamma_mt_candidates (1e6)": lambda k: k.gamma_mt_candidates(1.4, z, u),
        "positive_stable (1e6)": lambda k: k.positive_stable(0.4, ang, w),
        "clayton_from_frailty (1e6)": lambda k: k.clayton_from_frailty(e, log_v, 2.5),
    }


def end_to_end(disable):
    env = dict(os.environ)
    if disable:
        env["SUMBOUNDS_DISABLE_NUMBA"] = "1"
    else:
        env.pop("SUMBOUNDS_DISABLE_NUMBA", None)
    out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True,
                         check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    print(f"{'kernel':32s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, fn in cases(rng).items():
        t_np = min(timeit.repeat(lambda: fn(knp), number=1, repeat=args.repeat)) * 1e3
        if knb is None:
            print(f"{name:32s} {t_np:10.2f} {'n/a':>10s}")
            continue
        fn(knb)
        t_nb = min(timeit.repeat(lambda: fn(knb), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32s} {t_np:10.2f} {t_nb:10.2f} {t_np / t_nb:7.1f}x")

    print()
    t_np = end_to_end(disable=True)
    line = f"{'figure-2 verify, n=1e6 x 2':32s} {t_np * 1e3:10.1f}"
    if knb is not None:
        t_nb = end_to_end(disable=False)
        line += f" {t_nb * 1e3:10.1f} {t_np / t_nb:7.1f}x"
    print(line)


if __name__ == "__main__":
    main()
