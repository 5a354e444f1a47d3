"""Bracket polynomials multiplying exp(-2u) in the potential and force integrands.

With u = ωr/c the zero-temperature potential integrand is
``exp(-2u) P(u)`` and the force integrand is ``exp(-2u) Q(u)`` where
``Q(u) = u (P'(u) - 2 P(u))`` follows from differentiating in r.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError

__all__ = [
    "MAX_DEGREE",
    "ExponentialPolynomialKernel",
    "derive_force_kernel",
    "eval_kernel",
    "force_kernel",
    "potential_kernel",
]

MAX_DEGREE = 8


@dataclass(frozen=True)
class ExponentialPolynomialKernel:
    """Exact rational coefficients c_0..c_d of P(u) = sum c_k u^k.

    Trailing zero coefficients are stripped, so two kernels compare equal
    iff they describe the same polynomial.  The zero polynomial is stored
    as ``(Fraction(0),)``.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        exact = [Fraction(c) for c in coeffs]
        while len(exact) > 1 and exact[-1] == 0:
            exact.pop()
        if not exact:
            exact = [Fraction(0)]
        if len(exact) - 1 > MAX_DEGREE:
            raise DomainError(f"kernel degree {len(exact) - 1} exceeds {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", tuple(exact))
        object.__setattr__(self, "_floats", tuple(float(c) for c in exact))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_floats(self) -> tuple:
        return self._floats

    def __call__(self, u):
        return eval_kernel(self, u)

    def __repr__(self):
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"ExponentialPolynomialKernel([{inner}])"


def potential_kernel() -> ExponentialPolynomialKernel:
    """3 - 6u + (17/2)u^2 - (9/2)u^3 + (3/2)u^4."""
    return ExponentialPolynomialKernel([3, -6, Fraction(17, 2), Fraction(-9, 2), Fraction(3, 2)])


def force_kernel() -> ExponentialPolynomialKernel:
    """-12u + 29u^2 - (61/2)u^3 + 15u^4 - 3u^5."""
    return ExponentialPolynomialKernel([0, -12, 29, Fraction(-61, 2), 15, -3])


def derive_force_kernel(P: ExponentialPolynomialKernel) -> ExponentialPolynomialKernel:
    """Return Q(u) = u (P'(u) - 2 P(u)), exactly.

    This is the bracket produced by -d/dr acting on
    ``(1/r) * integral exp(-2u) P(u) du`` rewritten in the frequency
    variable; it has no constant term.
    """
    if P.degree > MAX_DEGREE - 1:
        raise DomainError(f"derived kernel would exceed degree {MAX_DEGREE}")
    c = P.coeffs
    # coefficient of u^(k+1) in u*(P' - 2P) is (k+1) c_{k+1} - 2 c_k
    out = [Fraction(0)]
    for k in range(len(c)):
        nxt = c[k + 1] if k + 1 < len(c) else Fraction(0)
        out.append((k + 1) * nxt - 2 * c[k])
    return ExponentialPolynomialKernel(out)


def eval_kernel(K: ExponentialPolynomialKernel, u):
    """Evaluate K at *u* by Horner's scheme.

    Float (or int) arguments are evaluated in double precision; a
    :class:`~fractions.Fraction` argument is evaluated exactly.
    """
    if isinstance(u, Fraction):
        acc = Fraction(0)
        for c in reversed(K.coeffs):
            acc = acc * u + c
        return acc
    u = float(u)
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    acc = 0.0
    for c in reversed(K.as_floats()):
        acc = acc * u + c
    return acc
