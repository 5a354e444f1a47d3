"""Closed-form temperature correction factor G(y) = F(r, T) / F(r, 0).

Summing the Matsubara series with the power-moment identity
sum n^k x^n = x A_k(x) / (1-x)^(k+1) gives, with x = exp(-2y) and
z = y / (1 - x),

    G = (16/25) x [ -12 z^2 + 29 z^3 (x+1) - (61/2) z^4 (x^2+4x+1)
                    + 15 z^5 (x^3+11x^2+11x+1)
                    - 3 z^6 (x^4+26x^3+66x^2+26x+1) ].

Evaluated literally this tends to -1 as y -> 0.  The ``ratio``
convention flips the sign so that G(0+) = 1 as the definition
F(r, T)/F(r, 0) requires; ``literal`` keeps the sign of the expression above.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import force_kernel
from .series import FORCE_PREFACTOR, eulerian_numerator

__all__ = [
    "UNDERFLOW_Y",
    "Y_SWITCH",
    "Convention",
    "CorrectionResult",
    "Method",
    "ReducedVariables",
    "correction_factor",
    "correction_table",
    "reduce",
]

Y_SWITCH = 1e-3
UNDERFLOW_Y = 350.0
_EXPM1_Y = 1e-8


class Convention(str, enum.Enum):
    RATIO = "ratio"
    LITERAL = "literal"


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    SMALL_Y_GUARD = "small_y_guard"
    UNDERFLOW = "underflow"
    ZERO_LIMIT = "zero_limit"


@dataclass(frozen=True)
class ReducedVariables:
    y: float
    x: float
    z: float
    one_minus_x: float


@dataclass(frozen=True)
class CorrectionResult:
    value: float
    convention: Convention
    underflowed: bool
    method: Method
    y: float

    def __float__(self):
        return self.value


def _check_y(y):
    if not (isinstance(y, (int, float)) and math.isfinite(y) and y > 0.0):
        raise DomainError(f"y must be finite and positive, got {y!r}")


def reduce(y: float) -> ReducedVariables:
    """Return x = exp(-2y) and z = y/(1-x).

    Below ``1e-8`` the difference 1 - x is taken from ``expm1`` to avoid
    cancellation.
    """
    _check_y(y)
    x = math.exp(-2.0 * y)
    one_minus_x = -math.expm1(-2.0 * y) if y < _EXPM1_Y else 1.0 - x
    return ReducedVariables(y, x, y / one_minus_x, one_minus_x)


# (coefficient of n^k y^k in the force kernel, k) for k = 1..5.
_FORCE_TERMS = tuple((float(c), k) for k, c in enumerate(force_kernel().coeffs) if c != 0)
_NUMERATORS = {k: tuple(float(a) for a in eulerian_numerator(k)) for _, k in _FORCE_TERMS}


def _poly(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _bracket_terms(x, z):
    return [q * z ** (k + 1) * _poly(_NUMERATORS[k], x) for q, k in _FORCE_TERMS]


def _literal_closed_form(y):
    v = reduce(y)
    acc = 0.0
    for term in _bracket_terms(v.x, v.z):
        acc += term
    return float(FORCE_PREFACTOR) * v.x * acc


def _literal_small_y(y):
    x = math.exp(-2.0 * y)
    z = y / -math.expm1(-2.0 * y)
    terms = sorted(_bracket_terms(x, z), key=abs)
    return float(FORCE_PREFACTOR) * x * math.fsum(terms)


def correction_factor(y: float, convention: Convention | str = Convention.RATIO) -> CorrectionResult:
    """Temperature correction factor at reduced distance *y*.

    Parameters
    ----------
    y : float
        Reduced variable 2π r k_B T / (ħ c), strictly positive.
    convention : {"ratio", "literal"}
        ``ratio`` (default) gives G(0+) = 1; ``literal`` the sign of the bare expression.

    Returns
    -------
    CorrectionResult
        For y >= 350, where exp(-2y) underflows, the value is an exact
        (signed) zero and ``underflowed`` is set.
    """
    _check_y(y)
    convention = Convention(convention)
    sign = -1.0 if convention is Convention.RATIO else 1.0
    if y >= UNDERFLOW_Y:
        return CorrectionResult(-sign * 0.0, convention, True, Method.UNDERFLOW, y)
    if y <= Y_SWITCH:
        literal, method = _literal_small_y(y), Method.SMALL_Y_GUARD
    else:
        literal, method = _literal_closed_form(y), Method.CLOSED_FORM
    return CorrectionResult(sign * literal, convention, False, method, y)


def correction_table(y_min: float, y_max: float, points: int, spacing: str = "log") -> list:
    """Rows ``(y, G_ratio)`` sampled on a linear or logarithmic grid."""
    if not (math.isfinite(y_min) and math.isfinite(y_max) and 0.0 < y_min < y_max):
        raise DomainError(f"need 0 < y_min < y_max, got ({y_min!r}, {y_max!r})")
    if not isinstance(points, int) or points < 2:
        raise DomainError(f"points must be an integer >= 2, got {points!r}")
    if spacing == "log":
        ys = np.geomspace(y_min, y_max, points)
    elif spacing == "linear":
        ys = np.linspace(y_min, y_max, points)
    else:
        raise DomainError(f"spacing must be 'linear' or 'log', got {spacing!r}")
    # Snap abscissae to 12 significant digits so a table printed at that
    # precision names exactly the y each G was evaluated at.
    grid = [float(f"{y:.12g}") for y in ys]
    return [(y, correction_factor(y).value) for y in grid]
