"""Matsubara summation and power-moment series.

At temperature T the frequency integral over exp(-2ωr/c) Q(ωr/c) becomes
a sum over ω_n = 2πn k_B T/ħ, for which ω_n r / c = n y.  The reduced
force ratio is then

    G_literal(y) = (16/25) y [ Q(0)/2 + sum_{n>=1} exp(-2ny) Q(ny) ].

The brute-force sums here are the independent oracle for the closed form
in :mod:`thermograv.correction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._backend import core
from .errors import ConvergenceError, DomainError
from .kernels import ExponentialPolynomialKernel, eval_kernel, force_kernel

__all__ = [
    "FORCE_PREFACTOR",
    "SeriesResult",
    "brute_eulerian_sum",
    "brute_matsubara_G",
    "eulerian_numerator",
    "eulerian_sum",
    "matsubara_sum",
]

FORCE_PREFACTOR = Fraction(16, 25)
TERM_BUDGET = 10_000_000
# Q(u) exp(-2u) for the force kernel has its last extremum below u = 6.
_LAST_EXTREMUM = 6.0


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    truncation_bound: float


def eulerian_numerator(k: int) -> tuple:
    """Coefficients (ascending powers) of A_k with sum n^k x^n = x A_k(x)/(1-x)^(k+1).

    Built from the Eulerian-number recurrence
    A(k, m) = (m+1) A(k-1, m) + (k-m) A(k-1, m-1).

    >>> eulerian_numerator(4)
    (1, 11, 11, 1)
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"Eulerian numerator needs k >= 1, got {k!r}")
    row = [1]
    for j in range(2, k + 1):
        prev = row
        row = [
            (m + 1) * (prev[m] if m < len(prev) else 0) + (j - m) * (prev[m - 1] if m >= 1 else 0)
            for m in range(j)
        ]
    return tuple(row)


def _check_x(x):
    if not (0.0 <= x < 1.0):
        raise DomainError(f"x must lie in [0, 1), got {x!r}")


def _check_k(k):
    if not isinstance(k, int) or not (0 <= k <= 5):
        raise DomainError(f"k must be an integer in 0..5, got {k!r}")


def eulerian_sum(k: int, x: float) -> float:
    """Closed form of sum_{n>=0} n^k x^n for k in 0..5 and 0 <= x < 1."""
    _check_k(k)
    _check_x(x)
    if k == 0:
        return 1.0 / (1.0 - x)
    if x == 0.0:
        return 0.0
    a = 0.0
    for c in reversed(eulerian_numerator(k)):
        a = a * x + c
    return x * a / (1.0 - x) ** (k + 1)


def brute_eulerian_sum(k: int, x: float, rel_tol: float = 1e-12) -> SeriesResult:
    """Direct compensated summation of sum_{n>=0} n^k x^n.

    Summation runs past the peak of n^k x^n before the relative stopping
    test is allowed to fire, then a geometric tail bound is attached.
    """
    _check_k(k)
    _check_x(x)
    if rel_tol < 1e-15:
        raise DomainError(f"rel_tol must be >= 1e-15, got {rel_tol!r}")
    value, n, tail, ok = core.power_sum(k, float(x), rel_tol, 1, TERM_BUDGET)
    result = SeriesResult(value, n, tail)
    if not ok:
        raise ConvergenceError(f"power sum with x={x} exceeded {TERM_BUDGET} terms", estimate=result)
    return result


def min_matsubara_terms(y: float) -> int:
    """Fewest terms any Matsubara sum may use; the summand peaks near ny = 3."""
    return math.ceil(3.0 / y) + 5


def matsubara_sum(
    K: ExponentialPolynomialKernel,
    y: float,
    rel_tol: float = 1e-14,
    max_terms: int = TERM_BUDGET,
) -> SeriesResult:
    """Half-weighted n = 0 term plus sum_{n>=1} exp(-2ny) K(ny)."""
    if not (math.isfinite(y) and y > 0.0):
        raise DomainError(f"y must be finite and positive, got {y!r}")
    # n = 0 carries weight one half; it vanishes for kernels without a constant term.
    zero_term = 0.5 * eval_kernel(K, 0.0)
    value, n, tail, ok = core.matsubara_sum(
        K.as_floats(), float(y), rel_tol, _LAST_EXTREMUM, min_matsubara_terms(y), max_terms
    )
    result = SeriesResult(zero_term + value, n, tail)
    if not ok:
        raise ConvergenceError(f"Matsubara sum at y={y} exceeded {max_terms} terms", estimate=result)
    return result


def brute_matsubara_G(y: float, rel_tol: float = 1e-14, max_terms: int = TERM_BUDGET) -> SeriesResult:
    """Literal-sign force ratio from direct Matsubara summation.

    Negative-valued: the force kernel integrates to -25/16, so the sum
    tends to -1 as y -> 0.
    """
    s = matsubara_sum(force_kernel(), y, rel_tol, max_terms)
    factor = float(FORCE_PREFACTOR) * y
    return SeriesResult(factor * s.value, s.terms_used, factor * s.truncation_bound)
