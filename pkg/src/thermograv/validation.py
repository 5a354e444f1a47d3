"""Self-validation suite behind ``thermograv validate``.

Every check compares an implementation path with an independent route
(exact rationals, direct summation, partial sums, or values frozen from a
40-digit mpmath evaluation of the Matsubara series) at a fixed tolerance.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .constants import CODATA_2018, PhysicalConstants, reduced_y, thermal_length
from .correction import correction_factor, correction_table
from .kernels import ExponentialPolynomialKernel, derive_force_kernel, force_kernel, potential_kernel
from .physics import gravity_range
from .quadrature import exp_moment, integrate_kernel_exact, integrate_kernel_numeric
from .series import (
    FORCE_PREFACTOR,
    brute_eulerian_sum,
    brute_matsubara_G,
    eulerian_numerator,
    eulerian_sum,
)

__all__ = ["CheckResult", "PINNED", "run_checks"]

# Frozen from mpmath (dps=40) summation of the Matsubara series.
PINNED = {
    "y_star_0.5": 4.840706102575450,
    "y_min": 2.286398757168234,
    "g_min": 0.5880299815854452,
    "y_max": 3.609821195160573,
    "g_max": 0.6979844654034022,
}

EULERIAN_EXPECTED = {1: (1,), 2: (1, 1), 3: (1, 4, 1), 4: (1, 11, 11, 1), 5: (1, 26, 66, 26, 1)}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name:<34s} measured={self.measured:.3e}  tol={self.tolerance:.1e}"
        return f"{text}  {self.detail}" if self.detail else text


def _rel(a, b):
    return abs(a - b) / abs(b)


def check_newton_potential():
    exact = FORCE_PREFACTOR * integrate_kernel_exact(potential_kernel())
    num = integrate_kernel_numeric(potential_kernel(), 1e-10)
    err = _rel(float(FORCE_PREFACTOR) * num.value, 1.0)
    return [
        CheckResult("newton_potential_exact", exact == 1, float(abs(exact - 1)), 0.0, f"(16/25)*I_V = {exact}"),
        CheckResult("newton_potential_numeric", err <= 1e-10, err, 1e-10),
    ]


def check_newton_force():
    exact = FORCE_PREFACTOR * integrate_kernel_exact(force_kernel())
    num = integrate_kernel_numeric(force_kernel(), 1e-10)
    err = _rel(abs(float(FORCE_PREFACTOR) * num.value), 1.0)
    return [
        CheckResult("newton_force_exact", abs(exact) == 1, float(abs(abs(exact) - 1)), 0.0,
                    f"(16/25)*I_F = {exact} (literal prefactor gives +gm1m2/r^2)"),
        CheckResult("newton_force_numeric", err <= 1e-10, err, 1e-10),
    ]


def check_kernel_derivation():
    derived = derive_force_kernel(potential_kernel())
    ok = derived == force_kernel()
    return [CheckResult("kernel_derivation", ok, 0.0 if ok else 1.0, 0.0)]


def check_moments():
    ok = all(exp_moment(n) == Fraction(n, 2) * exp_moment(n - 1) for n in range(1, 21))
    return [CheckResult("moment_recurrence", ok, 0.0 if ok else 1.0, 0.0)]


def check_quadrature_random(count):
    rng = random.Random(20240611)
    worst = 0.0
    for _ in range(count):
        K = ExponentialPolynomialKernel([rng.uniform(-100, 100) for _ in range(rng.randint(1, 9))])
        exact = float(integrate_kernel_exact(K))
        num = integrate_kernel_numeric(K, 1e-10).value
        worst = max(worst, abs(num - exact) / abs(exact))
    return [CheckResult("quadrature_random_kernels", worst <= 1e-10, worst, 1e-10, f"{count} kernels")]


def check_eulerian():
    match = all(eulerian_numerator(k) == EULERIAN_EXPECTED[k] for k in EULERIAN_EXPECTED)
    partial = math.fsum(n**5 / 2.0**n for n in range(1, 81))
    spot = abs(eulerian_sum(5, 0.5) - partial)
    worst = 0.0
    for k in range(6):
        for x in (0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99):
            closed = eulerian_sum(k, x)
            worst = max(worst, _rel(brute_eulerian_sum(k, x, 1e-13).value, closed))
    return [
        CheckResult("eulerian_numerators_verbatim", match, 0.0 if match else 1.0, 0.0),
        CheckResult("eulerian_spot_1082", spot <= 1e-9, spot, 1e-9, f"partial sum {partial!r}"),
        CheckResult("eulerian_closed_vs_brute", worst <= 1e-10, worst, 1e-10),
    ]


def check_oracle(points):
    worst = 0.0
    ok = True
    for y in np.geomspace(0.01, 30.0, points):
        y = float(y)
        closed = correction_factor(y, "literal").value
        brute = brute_matsubara_G(y).value
        dev = abs(closed - brute)
        ok &= dev <= 1e-10 * abs(brute) + 1e-14
        worst = max(worst, dev / abs(brute))
    return [CheckResult("closed_form_vs_matsubara", ok, worst, 1e-10,
                        f"{points} log-spaced y in [0.01, 30], floor 1e-14")]


def check_limits():
    g_small = correction_factor(1e-6)
    g_30 = correction_factor(30.0)
    under = [correction_factor(y) for y in (350.0, 500.0, 1e6)]
    under_ok = all(r.underflowed and r.value == 0.0 for r in under)
    lit_small = correction_factor(1e-6, "literal").value
    lit_under = correction_factor(350.0, "literal").value
    lit_ok = abs(lit_small + 1.0) <= 1e-6 and lit_under == 0.0 and math.copysign(1.0, lit_under) < 0
    return [
        CheckResult("ratio_limit_y_to_0", abs(g_small.value - 1.0) <= 1e-6, abs(g_small.value - 1.0), 1e-6),
        CheckResult("ratio_limit_y_30", g_30.value <= 1e-15, g_30.value, 1e-15),
        CheckResult("underflow_flag_y_ge_350", under_ok, max(abs(r.value) for r in under), 0.0),
        CheckResult("literal_limits", lit_ok, abs(lit_small + 1.0), 1e-6, "-1 at y->0, -0 at underflow"),
    ]


def exactly_scalable_pairs(count, seed=7, kappas=(2, 10, 1000)):
    """Random (r, T) for which kappa*r and T/kappa are exact in binary64.

    r and T get integer significands below 2^40 so the scaled values need
    no rounding; T's significand carries a factor lcm(kappas).
    """
    rng = random.Random(seed)
    lcm = math.lcm(*kappas)
    pairs = []
    for _ in range(count):
        r = math.ldexp(rng.randrange(1, 2**40), rng.randint(-70, -20))
        T = math.ldexp(lcm * rng.randrange(1, 2**30), rng.randint(-60, -30))
        pairs.append((r, T))
    return pairs


def check_scaling(consts: PhysicalConstants, pairs=50):
    mismatches = 0
    for r, T in exactly_scalable_pairs(pairs):
        base = correction_factor(reduced_y(r, T, consts)).value
        for kappa in (2, 10, 1000):
            other = correction_factor(reduced_y(kappa * r, T / kappa, consts)).value
            mismatches += base != other
    worst = 0.0
    for kappa in (2.0, 10.0, 1000.0):
        ref = gravity_range(2.7, 0.5, consts)
        scaled = gravity_range(2.7 / kappa, 0.5, consts)
        worst = max(worst, _rel(scaled.r_star, kappa * ref.r_star))
    return [
        CheckResult("scaling_bit_for_bit", mismatches == 0, float(mismatches), 0.0, f"{pairs} pairs x 3 kappas"),
        CheckResult("range_scales_as_1_over_T", worst <= 1e-12, worst, 1e-12),
    ]


def check_range(consts: PhysicalConstants):
    sol = gravity_range(2.7, 0.5, consts)
    err = abs(sol.y_star - PINNED["y_star_0.5"])
    lt = thermal_length(2.7, consts)
    r_err = _rel(sol.r_star, sol.y_star * lt)
    ok = err <= 1e-6 and sol.crossings_found == 1 and r_err <= 1e-15
    return [CheckResult("range_threshold_0.5", ok, err, 1e-6,
                        f"y*={sol.y_star:.10f} crossings={sol.crossings_found} r*={sol.r_star:.6e} m")]


def _local_extrema(rows):
    ys = [r[0] for r in rows]
    gs = [r[1] for r in rows]
    minima, maxima = [], []
    for i in range(1, len(gs) - 1):
        if gs[i] < gs[i - 1] and gs[i] <= gs[i + 1]:
            minima.append((ys[i], gs[i]))
        if gs[i] > gs[i - 1] and gs[i] >= gs[i + 1]:
            maxima.append((ys[i], gs[i]))
    return minima, maxima


def check_figure1(points):
    rows = correction_table(0.01, 30.0, points, "log")
    start_ok = abs(rows[0][1] - 1.0) <= 1e-3
    end_ok = rows[-1][1] < 1e-15
    # step 0.01: extremum location within one step, value within 1e-4
    fine = correction_table(1.0, 6.0, 501, "linear")
    minima, maxima = _local_extrema(fine)
    shape_ok = (
        len(minima) == 1
        and len(maxima) == 1
        and abs(minima[0][0] - PINNED["y_min"]) <= 0.01
        and abs(minima[0][1] - PINNED["g_min"]) <= 1e-4
        and abs(maxima[0][0] - PINNED["y_max"]) <= 0.01
        and abs(maxima[0][1] - PINNED["g_max"]) <= 1e-4
    )
    detail = f"min={minima} max={maxima}"
    return [
        CheckResult("figure1_endpoints", start_ok and end_ok, rows[-1][1], 1e-15,
                    f"G(0.01)={rows[0][1]:.12g} G(30)={rows[-1][1]:.3e}"),
        CheckResult("figure1_nonmonotone_shape", shape_ok, 0.0 if shape_ok else 1.0, 0.0, detail),
    ]


def run_checks(consts: PhysicalConstants = CODATA_2018, quick: bool = False,
               report: Callable[[CheckResult], None] | None = None) -> list:
    """Run every check; *quick* thins the y-grids tenfold."""
    thin = 10 if quick else 1
    groups = [
        check_newton_potential,
        check_newton_force,
        check_kernel_derivation,
        check_moments,
        lambda: check_quadrature_random(max(2, 20 // thin)),
        check_eulerian,
        lambda: check_oracle(200 // thin),
        check_limits,
        lambda: check_scaling(consts),
        lambda: check_range(consts),
        lambda: check_figure1(300 // thin),
    ]
    results = []
    start = time.perf_counter()
    for group in groups:
        for result in group():
            results.append(result)
            if report is not None:
                report(result)
    elapsed = time.perf_counter() - start
    results.append(CheckResult("runtime_under_60s", elapsed < 60.0, elapsed, 60.0))
    if report is not None:
        report(results[-1])
    return results
