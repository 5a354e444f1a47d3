"""Compare the compiled core against the pure-Python fallback.

    python benchmarks/bench_backends.py [--repeat N]

Each workload is timed with both cores and the results are checked to be
bit-identical before speed-ups are reported.
"""
import argparse
import math
import timeit

import numpy as np

from thermograv import _pycore
from thermograv.kernels import force_kernel, potential_kernel

try:
    from thermograv import _core
except ImportError:
    _core = None

FORCE = force_kernel().as_floats()
POTENTIAL = potential_kernel().as_floats()
Y_GRID = [float(y) for y in np.geomspace(0.01, 30.0, 200)]


def matsubara_grid(core):
    return [core.matsubara_sum(FORCE, y, 1e-14, 6.0, math.ceil(3 / y) + 5, 10**7) for y in Y_GRID]


def matsubara_small_y(core):
    return core.matsubara_sum(FORCE, 1e-4, 1e-14, 6.0, 30005, 10**7)


def power_sums(core):
    return [core.power_sum(k, x, 1e-13, 1, 10**7) for k in range(6) for x in (0.01, 0.1, 0.5, 0.9, 0.99)]


def gk_panels(core):
    return [core.gk15(POTENTIAL, 0.1 * i, 0.1 * (i + 1)) for i in range(2000)]


WORKLOADS = [
    ("matsubara, 200 y in [0.01, 30]", matsubara_grid),
    ("matsubara, y = 1e-4", matsubara_small_y),
    ("power sums, k 0..5 x 5 x", power_sums),
    ("gk15, 2000 panels", gk_panels),
]


def best_time(fn, core, repeat):
    return min(timeit.repeat(lambda: fn(core), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _core is None:
        print("compiled core not built; only the pure-Python timings are shown")
    print(f"{'workload':<34s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speed-up':>9s}")
    for name, fn in WORKLOADS:
        t_py = best_time(fn, _pycore, args.repeat)
        if _core is None:
            print(f"{name:<34s} {1e3 * t_py:12.2f} {'-':>12s} {'-':>9s}")
            continue
        if fn(_core) != fn(_pycore):
            raise SystemExit(f"{name}: backends disagree")
        t_c = best_time(fn, _core, args.repeat)
        print(f"{name:<34s} {1e3 * t_py:12.2f} {1e3 * t_c:12.2f} {t_py / t_c:8.1f}x")


if __name__ == "__main__":
    main()
