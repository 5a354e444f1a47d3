import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thermograv import ConvergenceError, DomainError, MomentRangeError
from thermograv._pycore import WG, WGK, XGK
from thermograv.kernels import ExponentialPolynomialKernel, force_kernel, potential_kernel
from thermograv.quadrature import (
    exp_moment,
    integrate_kernel_exact,
    integrate_kernel_numeric,
    tail_bound,
)


def test_exp_moment_values():
    assert exp_moment(0) == Fraction(1, 2)
    assert exp_moment(1) == Fraction(1, 4)
    assert exp_moment(5) == Fraction(120, 64)
    assert float(exp_moment(5)) == 1.875


def test_exp_moment_recurrence():
    for n in range(1, 21):
        assert exp_moment(n) == Fraction(n, 2) * exp_moment(n - 1)


def test_exp_moment_range():
    exp_moment(20)
    with pytest.raises(MomentRangeError):
        exp_moment(21)
    with pytest.raises(DomainError):
        exp_moment(-1)


def test_kronrod_constants():
    # 7-point Gauss is exact to degree 13, the 15-point Kronrod extension to 22
    kron = lambda f: WGK[7] * f(0.0) + sum(w * (f(x) + f(-x)) for x, w in zip(XGK[:7], WGK[:7]))
    gauss = lambda f: WG[3] * f(0.0) + sum(WG[j] * (f(XGK[2 * j + 1]) + f(-XGK[2 * j + 1])) for j in range(3))
    for deg in range(0, 23, 2):
        exact = 2.0 / (deg + 1)
        assert kron(lambda x: x**deg) == pytest.approx(exact, rel=1e-14)
        if deg <= 13:
            assert gauss(lambda x: x**deg) == pytest.approx(exact, rel=1e-14)


def test_exact_integrals():
    assert integrate_kernel_exact(potential_kernel()) == Fraction(25, 16)
    assert integrate_kernel_exact(force_kernel()) == Fraction(-25, 16)
    assert integrate_kernel_exact(ExponentialPolynomialKernel([1])) == Fraction(1, 2)


@pytest.mark.parametrize("kernel,expected", [(potential_kernel, 1.5625), (force_kernel, -1.5625)])
def test_numeric_integrals(kernel, expected):
    res = integrate_kernel_numeric(kernel(), 1e-10)
    assert res.value == pytest.approx(expected, rel=1e-10)
    assert res.abs_error_estimate >= 0
    assert res.evaluations >= 1


def test_numeric_zero_kernel():
    res = integrate_kernel_numeric(ExponentialPolynomialKernel([0]), 1e-6)
    assert res.value == 0.0


@pytest.mark.parametrize("tol", [1e-15, 0.1])
def test_numeric_tolerance_domain(tol):
    with pytest.raises(DomainError):
        integrate_kernel_numeric(potential_kernel(), tol)


def test_budget_exhaustion_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        integrate_kernel_numeric(potential_kernel(), 1e-14, budget=30)
    assert info.value.estimate is not None
    assert info.value.estimate.value == pytest.approx(1.5625, rel=1e-3)


def test_tail_bound_dominates_true_tail():
    # true tail of exp(-2t) t^n from T: Gamma(n+1, 2T) / 2^(n+1)
    for n in range(0, 9):
        K = ExponentialPolynomialKernel([0] * n + [1])
        for T in (max(n, 1), 2 * n + 3, 20.0):
            true_tail = math.factorial(n) * math.exp(-2 * T) * sum((2 * T) ** j / math.factorial(j) for j in range(n + 1))
            true_tail /= 2 ** (n + 1)
            assert true_tail <= tail_bound(K, float(T)) * (1 + 1e-12)


coeff = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_subnormal=False)
random_kernels = st.lists(coeff, min_size=1, max_size=9).map(ExponentialPolynomialKernel)


@given(random_kernels, st.sampled_from([1e-12, 1e-10, 1e-6]))
def test_numeric_matches_exact(K, tol):
    exact = float(integrate_kernel_exact(K))
    res = integrate_kernel_numeric(K, tol)
    assert abs(res.value - exact) <= tol * abs(exact) + res.abs_error_estimate


@given(random_kernels)
def test_doubling_cut_changes_less_than_error_estimate(K):
    res = integrate_kernel_numeric(K, 1e-10)
    from thermograv.quadrature import _adaptive

    doubled, _, _, _ = _adaptive(K.as_floats(), 0.0, 2.0 * res.t_cut, 1e-12, 10**6)
    assert abs(doubled - res.value) <= res.abs_error_estimate + 1e-12 * abs(doubled)
