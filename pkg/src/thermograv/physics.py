"""Potential, force and finite range in physical (SI) units."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import CODATA_2018, PhysicalConstants, reduced_y, thermal_length
from .correction import UNDERFLOW_Y, Convention, CorrectionResult, Method, correction_factor
from .errors import DomainError, NoCrossingError
from .kernels import force_kernel, potential_kernel
from .quadrature import integrate_kernel_exact
from .series import FORCE_PREFACTOR

__all__ = [
    "GRID_STEP",
    "ParticlePair",
    "RangeSolution",
    "ThermalForce",
    "force_finite_T",
    "force_zero_T",
    "gravity_range",
    "potential_zero_T",
    "static_polarizability",
]

GRID_STEP = 0.05
BISECTION_TOL = 1e-10
_Y_FIRST = 1e-6

# (16/25) times the dimensionless integrals; both reduce to exactly +-1.
_POTENTIAL_FACTOR = FORCE_PREFACTOR * integrate_kernel_exact(potential_kernel())
_FORCE_FACTOR = FORCE_PREFACTOR * integrate_kernel_exact(force_kernel())


@dataclass(frozen=True)
class ParticlePair:
    m1: float
    m2: float

    def __post_init__(self):
        for name in ("m1", "m2"):
            m = getattr(self, name)
            if not (isinstance(m, (int, float)) and math.isfinite(m) and m > 0.0):
                raise DomainError(f"{name} must be finite and positive, got {m!r}")


@dataclass(frozen=True)
class ThermalForce:
    """Finite-temperature force together with the factor that produced it."""

    force: float
    y: float
    correction: CorrectionResult

    @property
    def underflowed(self) -> bool:
        return self.correction.underflowed

    def __float__(self):
        return self.force


@dataclass(frozen=True)
class RangeSolution:
    y_star: float
    r_star: float
    threshold: float
    crossings_found: int
    bracket_width: float
    temperature: float


def _check_r(r):
    if not (isinstance(r, (int, float)) and math.isfinite(r) and r > 0.0):
        raise DomainError(f"r must be finite and positive, got {r!r}")


def static_polarizability(m: float, consts: PhysicalConstants = CODATA_2018) -> float:
    """Static polarizability m sqrt(32π γ / (25 ħ c)) of a composite particle."""
    if not (math.isfinite(m) and m >= 0.0):
        raise DomainError(f"mass must be finite and non-negative, got {m!r}")
    return m * math.sqrt(32.0 * math.pi * consts.gamma_grav / (25.0 * consts.hbar * consts.c))


def potential_zero_T(pair: ParticlePair, r: float, consts: PhysicalConstants = CODATA_2018) -> float:
    """Zero-temperature interaction energy in joules; reduces to -γ m1 m2 / r."""
    _check_r(r)
    return -consts.gamma_grav * pair.m1 * pair.m2 * float(_POTENTIAL_FACTOR) / r


def force_zero_T(pair: ParticlePair, r: float, consts: PhysicalConstants = CODATA_2018) -> float:
    """Radial zero-temperature force in newtons, negative when attractive.

    The prefactor -γ m1 m2 (4/5)^2 / (c r) times the kernel integral
    (-25/16) c / r comes out as +γ m1 m2 / r^2.  The attractive Newtonian
    result is -γ m1 m2 / r^2, so the sign is flipped here, the same ratio
    convention used for the correction factor.
    """
    _check_r(r)
    literal = -consts.gamma_grav * pair.m1 * pair.m2 * float(_FORCE_FACTOR) / (r * r)
    return -literal


def force_finite_T(
    pair: ParticlePair, r: float, T: float, consts: PhysicalConstants = CODATA_2018
) -> ThermalForce:
    """Force at background temperature *T*: F(r, 0) G(y)."""
    f0 = force_zero_T(pair, r, consts)
    y = reduced_y(r, T, consts)
    if y == 0.0:
        g = CorrectionResult(1.0, Convention.RATIO, False, Method.ZERO_LIMIT, 0.0)
        return ThermalForce(f0, 0.0, g)
    g = correction_factor(y, Convention.RATIO)
    return ThermalForce(f0 * g.value, y, g)


def _majorant(y):
    # asymptotic bound on |G|: (16/25) 3 y^6 exp(-2y)
    return float(FORCE_PREFACTOR) * 3.0 * y**6 * math.exp(-2.0 * y)


def _search_limit(threshold):
    y = 6.0
    while _majorant(y) >= threshold:
        y += 1.0
    # the majorant only holds asymptotically; also demand the factor itself is below
    while correction_factor(y).value >= threshold:
        y += 1.0
    return y


def gravity_range(T: float, threshold: float, consts: PhysicalConstants = CODATA_2018) -> RangeSolution:
    """Largest distance at which the correction factor falls to *threshold*.

    G is scanned on a grid of step 0.05 out to where its asymptotic
    majorant is below the threshold; the last sign change of
    G - threshold is refined by bisection.  Because G is not monotone
    (local minimum near y = 2.3, maximum near y = 3.6) thresholds
    between those values are crossed three times.

    Raises
    ------
    NoCrossingError
        If G never crosses the threshold on the scanned interval.
    """
    if not (isinstance(T, (int, float)) and math.isfinite(T) and T > 0.0):
        raise DomainError(f"T must be finite and positive, got {T!r}")
    if not (isinstance(threshold, (int, float)) and 0.0 < threshold < 1.0):
        raise DomainError(f"threshold must lie strictly between 0 and 1, got {threshold!r}")

    def h(y):
        return correction_factor(y).value - threshold

    y_hi = _search_limit(threshold)
    if y_hi >= UNDERFLOW_Y:
        raise DomainError(f"threshold {threshold!r} is below the smallest representable correction factor")
    steps = math.ceil(y_hi / GRID_STEP)
    grid = [_Y_FIRST] + [i * GRID_STEP for i in range(1, steps + 1)]
    values = [h(y) for y in grid]

    crossings = []
    for i in range(1, len(grid)):
        a, b = values[i - 1], values[i]
        if a == 0.0:
            continue
        if b == 0.0 or (a > 0.0) != (b > 0.0):
            crossings.append(i)
    if not crossings:
        raise NoCrossingError(
            f"correction factor does not cross {threshold} on (0, {y_hi}]; "
            f"its largest sampled value is {max(values) + threshold:.6g}"
        )

    i = crossings[-1]
    lo, hi = grid[i - 1], grid[i]
    f_lo = values[i - 1]
    if values[i] == 0.0:
        lo = hi
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = h(mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    y_star = 0.5 * (lo + hi)
    return RangeSolution(
        y_star=y_star,
        r_star=y_star * thermal_length(T, consts),
        threshold=float(threshold),
        crossings_found=len(crossings),
        bracket_width=hi - lo,
        temperature=float(T),
    )
