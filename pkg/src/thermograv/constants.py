"""Physical constants and the reduced distance-temperature variable.

All unit-bearing quantities are SI.  The defaults are the CODATA 2018
recommended values; ħ, c and k_B are exact in the revised SI.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .errors import DomainError

__all__ = [
    "CODATA_2018",
    "PhysicalConstants",
    "load_constants",
    "reduced_y",
    "scaled_temperature",
    "thermal_length",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """Pinned constants feeding every unit-bearing computation.

    Attributes
    ----------
    hbar : float
        Reduced Planck constant, J s.
    c : float
        Speed of light, m/s.
    k_boltzmann : float
        Boltzmann constant, J/K.
    gamma_grav : float
        Newtonian gravitational constant, m^3 kg^-1 s^-2.
    """

    hbar: float = 1.054571817e-34
    c: float = 299792458.0
    k_boltzmann: float = 1.380649e-23
    gamma_grav: float = 6.67430e-11
    source: str = "CODATA 2018"

    def __post_init__(self):
        for name in ("hbar", "c", "k_boltzmann", "gamma_grav"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise DomainError(f"{name} must be a real number, got {value!r}")
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be finite and strictly positive, got {value!r}")
            object.__setattr__(self, name, float(value))

    def with_overrides(self, **overrides) -> "PhysicalConstants":
        if overrides:
            return replace(self, source="override", **overrides)
        return self

    @property
    def fingerprint(self) -> str:
        """Short digest that changes iff a constant value changes."""
        text = ";".join(
            f"{f.name}={float.hex(getattr(self, f.name))}"
            for f in fields(self)
            if f.name != "source"
        )
        return hashlib.sha256(text.encode("ascii")).hexdigest()[:16]

    def as_dict(self) -> dict:
        return asdict(self)


CODATA_2018 = PhysicalConstants()

_CONFIG_KEYS = ("hbar", "c", "k_boltzmann", "gamma_grav")


def load_constants(path: str | Path | None = None) -> PhysicalConstants:
    """Read ``key = value`` overrides from *path* on top of CODATA 2018.

    Blank lines and ``#`` comments are ignored.  Unknown keys and values
    that are not strictly positive raise :class:`DomainError`.
    """
    if path is None:
        return CODATA_2018
    overrides = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _CONFIG_KEYS:
            raise DomainError(f"{path}:{lineno}: expected one of {', '.join(_CONFIG_KEYS)} as 'key = value'")
        try:
            overrides[key] = float(value.strip())
        except ValueError:
            raise DomainError(f"{path}:{lineno}: {value.strip()!r} is not a number") from None
    return CODATA_2018.with_overrides(**overrides)


def _check_nonnegative(name, value):
    if not math.isfinite(value) or value < 0.0:
        raise DomainError(f"{name} must be finite and non-negative, got {value!r}")


def reduced_y(r: float, T: float, consts: PhysicalConstants = CODATA_2018) -> float:
    """Return y = 2π r k_B T / (ħ c).

    The product ``r * T`` is formed first so that y depends on (r, T)
    only through that product.

    >>> reduced_y(1.0, 0.0)
    0.0
    """
    _check_nonnegative("r", r)
    _check_nonnegative("T", T)
    return (r * T) * (2.0 * math.pi * consts.k_boltzmann / (consts.hbar * consts.c))


def thermal_length(T: float, consts: PhysicalConstants = CODATA_2018) -> float:
    """Distance at which y = 1, ħc / (2π k_B T), in metres."""
    if not math.isfinite(T) or T <= 0.0:
        raise DomainError(f"T must be finite and positive, got {T!r}")
    return consts.hbar * consts.c / (2.0 * math.pi * consts.k_boltzmann * T)


def scaled_temperature(T0: float, scale: float) -> float:
    """Temperature after a uniform stretch of all wavelengths by *scale*."""
    if not (math.isfinite(T0) and T0 > 0.0):
        raise DomainError(f"T0 must be positive, got {T0!r}")
    if not (math.isfinite(scale) and scale > 0.0):
        raise DomainError(f"scale must be positive, got {scale!r}")
    return T0 / scale
