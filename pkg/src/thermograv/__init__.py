"""Dispersion-force model of gravitation at zero and finite temperature.

The finite-temperature force is F(r, T) = F(r, 0) G(y) with the reduced
variable y = 2π r k_B T / (ħ c).  This package evaluates G in closed
form, checks it against direct Matsubara summation, and solves for the
distance at which G falls to a chosen threshold.
"""
from ._backend import BACKEND
from .constants import CODATA_2018, PhysicalConstants, load_constants, reduced_y, scaled_temperature, thermal_length
from .correction import Convention, CorrectionResult, ReducedVariables, correction_factor, correction_table, reduce
from .errors import ConvergenceError, DomainError, MomentRangeError, NoCrossingError
from .kernels import ExponentialPolynomialKernel, derive_force_kernel, eval_kernel, force_kernel, potential_kernel
from .physics import (
    ParticlePair,
    RangeSolution,
    ThermalForce,
    force_finite_T,
    force_zero_T,
    gravity_range,
    potential_zero_T,
    static_polarizability,
)
from .quadrature import QuadratureResult, exp_moment, integrate_kernel_exact, integrate_kernel_numeric
from .series import SeriesResult, brute_eulerian_sum, brute_matsubara_G, eulerian_numerator, eulerian_sum

__version__ = "0.1.0"
