"""Holomorphic building blocks on the unit disc.

Every function here is a frozen value object that can be evaluated, together
with its derivative, at scalars or numpy arrays of points in the open unit
disc. Only the handful of closed forms the radius theorems need are provided,
plus truncated power series for everything else.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParameterError

__all__ = [
    "AnalyticFunction",
    "PowerSeries",
    "ClassicalLandauExtremal",
    "BlaschkeTypeExtremal",
    "LogDistortionExtremal",
    "ScaledIdentity",
    "evaluate",
    "deriv",
    "taylor_coefficients",
    "automorphism_series",
    "DEFAULT_CONTOUR_RADIUS",
    "DEFAULT_CONTOUR_SAMPLES",
]

DEFAULT_CONTOUR_RADIUS = 0.5
DEFAULT_CONTOUR_SAMPLES = 256


def _finite_complex(value, name: str) -> complex:
    c = complex(value)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ParameterError(f"{name} must be finite, got {value!r}")
    return c


def _disc_points(z):
    """Return ``(array, is_scalar)`` after checking ``|z| < 1`` everywhere."""
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("evaluation point is not finite")
    if np.any(np.abs(arr) >= 1.0):
        raise DomainError("evaluation point must satisfy |z| < 1")
    return arr, arr.ndim == 0


def _wrap(value, is_scalar):
    return complex(value) if is_scalar else value


class AnalyticFunction(ABC):
    """A holomorphic function on the unit disc with a closed-form derivative."""

    #: ``None`` for exact closed forms, highest retained power for truncations.
    truncation_order: int | None = None

    @abstractmethod
    def _value(self, z: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def _derivative(self, z: np.ndarray) -> np.ndarray: ...

    def __call__(self, z):
        return evaluate(self, z)

    def deriv(self, z):
        return deriv(self, z)


@dataclass(frozen=True)
class PowerSeries(AnalyticFunction):
    """Truncated series ``sum_n coeffs[n] z**n``."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(_finite_complex(c, "coefficient") for c in self.coeffs)
        if not coeffs:
            raise ParameterError("power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def truncation_order(self) -> int:  # type: ignore[override]
        return len(self.coeffs) - 1

    def _value(self, z):
        # Horner, highest power first
        return np.polyval(np.array(self.coeffs[::-1]), z)

    def _derivative(self, z):
        n = len(self.coeffs)
        if n == 1:
            return np.zeros_like(z)
        d = np.array([k * self.coeffs[k] for k in range(1, n)])
        return np.polyval(d[::-1], z)


@dataclass(frozen=True)
class ClassicalLandauExtremal(AnalyticFunction):
    """``M z (1 - M z) / (M - z)``, the sharp function of Landau's theorem."""

    M: float

    def __post_init__(self):
        if not (math.isfinite(self.M) and self.M >= 1.0):
            raise ParameterError(f"ClassicalLandauExtremal needs M >= 1, got {self.M}")

    def _value(self, z):
        M = self.M
        if M == 1.0:
            return z.copy()
        return M * z * (1 - M * z) / (M - z)

    def _derivative(self, z):
        M = self.M
        if M == 1.0:
            return np.ones_like(z)
        return M * M * (1 - 2 * M * z + z * z) / (M - z) ** 2


@dataclass(frozen=True)
class BlaschkeTypeExtremal(AnalyticFunction):
    """``M z (1 - M z**(n-1)) / (M - z**(n-1))``.

    Bounded by ``M`` on the disc, ``a_1 = 1`` and ``|a_n| = M - 1/M``.
    """

    M: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.M) and self.M > 1.0):
            raise ParameterError(f"BlaschkeTypeExtremal needs M > 1, got {self.M}")
        if int(self.n) != self.n or self.n < 2:
            raise ParameterError(f"BlaschkeTypeExtremal needs integer n >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    def _value(self, z):
        M = self.M
        w = z ** (self.n - 1)
        return M * z * (1 - M * w) / (M - w)

    def _derivative(self, z):
        M, n = self.M, self.n
        w = z ** (n - 1)
        inner = (1 - M * w) / (M - w)
        inner_w = (1 - M * M) / (M - w) ** 2
        return M * (inner + (n - 1) * w * inner_w)


@dataclass(frozen=True)
class LogDistortionExtremal(AnalyticFunction):
    """``L**2 z + (L**3 - L) log(1 - z/L)`` with derivative ``L(1 - L z)/(L - z)``.

    ``1 - z/L`` has positive real part on the disc, so the principal
    logarithm is used without branch tracking.
    """

    Lambda: float

    def __post_init__(self):
        if not (math.isfinite(self.Lambda) and self.Lambda > 1.0):
            raise ParameterError(f"LogDistortionExtremal needs Lambda > 1, got {self.Lambda}")

    def _value(self, z):
        L = self.Lambda
        return L * L * z + (L**3 - L) * np.log1p(-z / L)

    def _derivative(self, z):
        L = self.Lambda
        return L * (1 - L * z) / (L - z)


@dataclass(frozen=True)
class ScaledIdentity(AnalyticFunction):
    """``c z``."""

    c: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "c", _finite_complex(self.c, "c"))

    def _value(self, z):
        return self.c * z

    def _derivative(self, z):
        return np.full_like(z, self.c)


def evaluate(f: AnalyticFunction, z):
    """Value of ``f`` at ``z`` (scalar or array) in the open unit disc."""
    arr, scalar = _disc_points(z)
    return _wrap(f._value(arr), scalar)


def deriv(f: AnalyticFunction, z):
    """Closed-form derivative of ``f`` at ``z``."""
    arr, scalar = _disc_points(z)
    return _wrap(f._derivative(arr), scalar)


def taylor_coefficients(
    f: AnalyticFunction,
    N: int,
    rho: float = DEFAULT_CONTOUR_RADIUS,
    samples: int | None = None,
) -> list[complex]:
    """Approximate ``a_0 .. a_N`` by the trapezoidal Cauchy integral on ``|z| = rho``.

    The sample count defaults to ``max(256, 4N)``; aliasing error decays like
    ``rho**samples`` times the decay of the true coefficients, so the default
    is conservative for ``N <= 32``.
    """
    if not (0.0 < rho < 1.0):
        raise DomainError(f"contour radius must lie in (0, 1), got {rho}")
    if int(N) != N or N < 1:
        raise ParameterError(f"N must be a positive integer, got {N}")
    N = int(N)
    S = max(DEFAULT_CONTOUR_SAMPLES, 4 * N) if samples is None else int(samples)
    if S < 4 * N:
        raise ParameterError(f"need at least 4N = {4 * N} contour samples, got {S}")
    theta = 2.0 * np.pi * np.arange(S) / S
    values = evaluate(f, rho * np.exp(1j * theta))
    spectrum = np.fft.fft(values) / S
    scale = rho ** -np.arange(N + 1, dtype=float)
    return [complex(a) for a in spectrum[: N + 1] * scale]


def automorphism_series(a: complex, order: int) -> PowerSeries:
    """Truncation of ``(z + a) / (1 + conj(a) z)`` through ``z**order``."""
    a = _finite_complex(a, "a")
    if abs(a) >= 1:
        raise ParameterError("automorphism needs |a| < 1")
    coeffs: list[complex] = [a]
    scale = 1 - abs(a) ** 2
    for n in range(1, order + 1):
        coeffs.append(scale * (-a.conjugate()) ** (n - 1))
    return PowerSeries(tuple(coeffs))

