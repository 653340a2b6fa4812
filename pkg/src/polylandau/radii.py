"""Univalence radii, covering radii and bi-Lipschitz constants.

The three class radius functions

* ``phi_f1``: ``L(1 - L r)/(L - r) - sum_k r**k (M_k/(1 - r**2) + k M_k)``
* ``psi_f2``: ``1 - (M - 1/M)(2r - r**2)/(1 - r)**2 - sum_k (k+1) r**k Lambda_k``
* ``psi_f3``: ``L0(1 - L0 r)/(L0 - r) - sum_k (k+1) Lambda_k r**k``

all equal 1 at ``r = 0`` and are strictly decreasing on ``[0, 1)``, so plain
bisection brackets their unique root with a guaranteed certificate. Every
function accepts a scalar or a numpy array of radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError

__all__ = [
    "F1",
    "F2",
    "F3",
    "ClassParams",
    "RootFindConfig",
    "RadiusResult",
    "LipschitzBounds",
    "ReferenceRadius",
    "HarmonicLandauConstants",
    "phi_f1",
    "psi_f2",
    "psi_f3",
    "radius_function",
    "schlicht_radius",
    "bisect_decreasing",
    "solve_radius",
    "classical_landau",
    "golden_section_min",
    "harmonic_landau_constants",
    "theorem_c_radius",
    "theorem_d_radius",
    "theorem_e_radius",
    "bilipschitz",
]


def _check_nonneg_tail(values, symbol: str) -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    for k, v in enumerate(out, start=1):
        if not (math.isfinite(v) and v >= 0):
            raise ParameterError(f"{symbol}_{k} must be finite and >= 0, got {v}")
    return out


@dataclass(frozen=True)
class F1:
    """``|f_0'| < Lambda`` and ``|f_k| <= M_k``."""

    Lambda: float
    M: tuple[float, ...] = ()

    name = "f1"

    def __post_init__(self):
        if not (math.isfinite(self.Lambda) and self.Lambda > 1):
            raise ParameterError(f"f1 requires Lambda > 1, got {self.Lambda}")
        object.__setattr__(self, "M", _check_nonneg_tail(self.M, "M"))

    @property
    def m(self) -> int:
        return len(self.M) + 1

    @property
    def tail(self) -> tuple[float, ...]:
        return self.M


@dataclass(frozen=True)
class F2:
    """``|f_0| < M`` and ``|f_k'| <= Lambda_k``."""

    M: float
    Lambdas: tuple[float, ...] = ()

    name = "f2"

    def __post_init__(self):
        if not (math.isfinite(self.M) and self.M >= 1):
            raise ParameterError(f"f2 requires M >= 1, got {self.M}")
        object.__setattr__(self, "Lambdas", _check_nonneg_tail(self.Lambdas, "Lambda"))

    @property
    def m(self) -> int:
        return len(self.Lambdas) + 1

    @property
    def tail(self) -> tuple[float, ...]:
        return self.Lambdas


@dataclass(frozen=True)
class F3:
    """``|f_0'| < Lambda0`` and ``|f_k'| <= Lambda_k``."""

    Lambda0: float
    Lambdas: tuple[float, ...] = ()

    name = "f3"

    def __post_init__(self):
        if not (math.isfinite(self.Lambda0) and self.Lambda0 > 1):
            raise ParameterError(f"f3 requires Lambda0 > 1, got {self.Lambda0}")
        object.__setattr__(self, "Lambdas", _check_nonneg_tail(self.Lambdas, "Lambda"))

    @property
    def m(self) -> int:
        return len(self.Lambdas) + 1

    @property
    def tail(self) -> tuple[float, ...]:
        return self.Lambdas


ClassParams = Union[F1, F2, F3]


@dataclass(frozen=True)
class RootFindConfig:
    tol: float = 1e-12
    max_iter: int = 200
    endpoint_margin: float = 1e-9

    def __post_init__(self):
        if not self.tol > 0:
            raise ParameterError("tol must be positive")
        if self.max_iter < 1:
            raise ParameterError("max_iter must be >= 1")
        if not 0 < self.endpoint_margin < 0.5:
            raise ParameterError("endpoint_margin must lie in (0, 0.5)")


@dataclass(frozen=True)
class RadiusResult:
    r: float
    R: float
    residual: float
    iterations: int
    whole_disc: bool


@dataclass(frozen=True)
class LipschitzBounds:
    rho: float
    l: float  # noqa: E741
    L: float


class ReferenceRadius(NamedTuple):
    rho: float
    sigma: float


class HarmonicLandauConstants(NamedTuple):
    m_const: float
    rho0_A: float
    R0_A: float
    rho0_B: float
    R0_B: float


def _radii(r):
    arr = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0) or np.any(arr >= 1):
        raise DomainError("radius must lie in [0, 1)")
    return arr


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def _distortion_term(lam: float, r):
    return lam * (1 - lam * r) / (lam - r)


def phi_f1(r, p: F1):
    r = _radii(r)
    rr = 1 - r * r
    val = _distortion_term(p.Lambda, r)
    for k, Mk in enumerate(p.M, start=1):
        val = val - r**k * (Mk / rr + k * Mk)
    return _out(val)


def psi_f2(r, p: F2):
    r = _radii(r)
    val = np.ones_like(r)
    excess = p.M - 1 / p.M
    if excess:
        val = val - excess * (2 * r - r * r) / (1 - r) ** 2
    for k, lam in enumerate(p.Lambdas, start=1):
        val = val - (k + 1) * r**k * lam
    return _out(val)


def psi_f3(r, p: F3):
    r = _radii(r)
    val = _distortion_term(p.Lambda0, r)
    for k, lam in enumerate(p.Lambdas, start=1):
        val = val - (k + 1) * lam * r**k
    return _out(val)


def radius_function(p: ClassParams) -> Callable:
    """The class radius function ``r -> value`` for parameters ``p``."""
    if isinstance(p, F1):
        return lambda r: phi_f1(r, p)
    if isinstance(p, F2):
        return lambda r: psi_f2(r, p)
    if isinstance(p, F3):
        return lambda r: psi_f3(r, p)
    raise ParameterError(f"unknown class parameters {p!r}")


def _log_schlicht(lam: float, r: float) -> float:
    return lam * lam * r + (lam**3 - lam) * math.log1p(-r / lam)


def schlicht_radius(p: ClassParams, r: float) -> float:
    """Covering radius lower bound at univalence radius ``r``."""
    if isinstance(p, F1):
        return _log_schlicht(p.Lambda, r) - sum(r ** (k + 1) * Mk for k, Mk in enumerate(p.M, 1))
    if isinstance(p, F2):
        excess = p.M - 1 / p.M
        head = r - (excess * r * r / (1 - r) if excess else 0.0)
        return head - sum(r ** (k + 1) * lam for k, lam in enumerate(p.Lambdas, 1))
    if isinstance(p, F3):
        return _log_schlicht(p.Lambda0, r) - sum(lam * r ** (k + 1) for k, lam in enumerate(p.Lambdas, 1))
    raise ParameterError(f"unknown class parameters {p!r}")


def bisect_decreasing(fn: Callable[[float], float], lo: float, hi: float, cfg: RootFindConfig):
    """Root of a strictly decreasing ``fn`` with ``fn(lo) > 0 > fn(hi)``.

    Halves until the bracket is narrower than ``cfg.tol`` and the residual is
    below ``cfg.tol``, or until the bracket can no longer be split in double
    precision. Returns ``(root, residual, iterations)``.
    """
    flo, fhi = fn(lo), fn(hi)
    if not (flo > 0 > fhi):
        raise ConvergenceError(f"no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")
    for it in range(1, cfg.max_iter + 1):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            x, fx = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
            return x, fx, it
        fm = fn(mid)
        if fm == 0:
            return mid, fm, it
        if fm > 0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if hi - lo <= cfg.tol and abs(fm) <= cfg.tol:
            return mid, fm, it
    raise ConvergenceError(f"bisection did not converge in {cfg.max_iter} iterations")


def solve_radius(p: ClassParams, cfg: RootFindConfig | None = None) -> RadiusResult:
    """Univalence radius ``r`` and schlicht radius ``R`` for class parameters ``p``.

    If the radius function stays positive up to ``1 - endpoint_margin`` (only
    possible for ``F2(M=1)`` with a vanishing tail) the whole disc is reported.
    """
    cfg = cfg or RootFindConfig()
    fn = radius_function(p)
    hi = 1.0 - cfg.endpoint_margin
    f_hi = fn(hi)
    if f_hi > 0:
        return RadiusResult(1.0, schlicht_radius(p, 1.0), f_hi, 0, True)
    # fn(0) == 1 exactly, so 0 is always a valid left end
    r, residual, iterations = bisect_decreasing(fn, 0.0, hi, cfg)
    return RadiusResult(r, schlicht_radius(p, r), residual, iterations, False)


def classical_landau(M: float) -> ReferenceRadius:
    """``r0 = 1/(M + sqrt(M**2 - 1))`` and ``sigma0 = M r0**2``."""
    if not (math.isfinite(M) and M >= 1):
        raise ParameterError(f"classical Landau requires M >= 1, got {M}")
    r0 = 1 / (M + math.sqrt(M * M - 1))
    return ReferenceRadius(r0, M * r0 * r0)


_INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_min(fn: Callable[[float], float], a: float, b: float, tol: float = 1e-10):
    """Minimiser and minimum of a unimodal ``fn`` on ``[a, b]``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(500):
        if b - a <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    else:
        raise ConvergenceError("golden-section search did not converge")
    x = 0.5 * (a + b)
    return x, fn(x)


def harmonic_landau_constants(M: float = 1.0, Lambda: float = 1.0) -> HarmonicLandauConstants:
    """Constants of the two classical harmonic Landau theorems (not sharp)."""
    if not (math.isfinite(M) and M >= 1):
        raise ParameterError(f"M must be >= 1, got {M}")
    if not (math.isfinite(Lambda) and Lambda >= 1):
        raise ParameterError(f"Lambda must be >= 1, got {Lambda}")
    _, m_const = golden_section_min(lambda r: (3 - r * r) / (r * (1 - r * r)), 1e-6, 1 - 1e-6)
    rho_a = math.pi**2 / (16 * m_const * M)
    rho_b = math.pi / (4 * (1 + Lambda))
    return HarmonicLandauConstants(m_const, rho_a, rho_a / 2, rho_b, rho_b / 2)


def theorem_c_radius(m: int, M: float, cfg: RootFindConfig | None = None) -> ReferenceRadius:
    """Non-sharp radii for ``f_k(0) = 0, f_k'(0) = 1, |f_k| <= M`` (reference only)."""
    cfg = cfg or RootFindConfig()
    if int(m) != m or m < 2:
        raise ParameterError(f"m must be an integer >= 2, got {m}")
    if not (math.isfinite(M) and M > 1):
        raise ParameterError(f"M must exceed 1, got {M}")
    m = int(m)

    def equation(rho):
        s = rho * (2 - rho) / (1 - rho) ** 2
        for k in range(1, m):
            s += rho**k * (1 + k - k * rho) / (1 - k * rho) ** 2
        return 1 - M * s

    hi = min(1.0, 1.0 / (m - 1)) - cfg.endpoint_margin
    rho, _, _ = bisect_decreasing(equation, 0.0, hi, cfg)
    sigma = (
        rho
        - rho * rho * (1 - rho ** (m - 1)) / (1 - rho)
        - M * sum(rho ** (k + 2) / (1 - rho) for k in range(m))
    )
    return ReferenceRadius(rho, sigma)


def theorem_d_radius(Lambda1: float, Lambda2: float) -> ReferenceRadius:
    """Sharp bi-analytic radii for ``|G'| <= Lambda1``, ``|H'| < Lambda2``."""
    if not (math.isfinite(Lambda1) and Lambda1 >= 0):
        raise ParameterError(f"Lambda1 must be >= 0, got {Lambda1}")
    if not (math.isfinite(Lambda2) and Lambda2 > 1):
        raise ParameterError(f"Lambda2 must exceed 1, got {Lambda2}")
    a = Lambda2 * (2 * Lambda1 + Lambda2)
    rho = 2 * Lambda2 / (a + math.sqrt(a * a - 8 * Lambda1 * Lambda2))
    sigma = _log_schlicht(Lambda2, rho) - Lambda1 * rho * rho
    return ReferenceRadius(rho, sigma)


def theorem_e_radius(Lambda: float) -> ReferenceRadius:
    """Sharp bi-analytic radii for ``|G'| <= Lambda`` with a self-map head."""
    if not (math.isfinite(Lambda) and Lambda >= 0):
        raise ParameterError(f"Lambda must be >= 0, got {Lambda}")
    rho = 1.0 if Lambda <= 0.5 else 1 / (2 * Lambda)
    return ReferenceRadius(rho, rho - Lambda * rho * rho)


def bilipschitz(p: ClassParams, rho: float, cfg: RootFindConfig | None = None) -> LipschitzBounds:
    """Co-Lipschitz and Lipschitz constants of class ``p`` on the closed disc of radius ``rho``."""
    r = solve_radius(p, cfg).r
    if not (0 < rho < r):
        raise ParameterError(f"rho = {rho} must lie in (0, r) with univalence radius r = {r}")
    if isinstance(p, F1):
        tail = sum(rho**k * (Mk / (1 - rho * rho) + k * Mk) for k, Mk in enumerate(p.M, 1))
        lower, upper = phi_f1(rho, p), p.Lambda + tail
    else:
        tail = sum((k + 1) * lam * rho**k for k, lam in enumerate(p.tail, 1))
        if isinstance(p, F2):
            lower, upper = psi_f2(rho, p), p.M / (1 - rho * rho) + tail
        else:
            lower, upper = psi_f3(rho, p), p.Lambda0 + tail
    if not lower > 0:
        raise ParameterError(f"co-Lipschitz constant {lower} is not positive at rho = {rho}")
    return LipschitzBounds(float(rho), float(lower), float(upper))

