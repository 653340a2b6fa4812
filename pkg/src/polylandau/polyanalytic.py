"""Poly-analytic functions ``F(z) = sum_k conj(z)**k f_k(z)`` on the unit disc."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .analytic import (
    AnalyticFunction,
    LogDistortionExtremal,
    ScaledIdentity,
    _disc_points,
    _wrap,
)
from .errors import ParameterError

__all__ = [
    "PolyAnalyticFunction",
    "WirtingerPair",
    "eval_poly",
    "wirtinger",
    "dilatation_bounds",
    "make_extremal_F0",
    "NORMALIZATION_TOL",
]

NORMALIZATION_TOL = 1e-12


class WirtingerPair(NamedTuple):
    dz: complex
    dzbar: complex


@dataclass(frozen=True)
class PolyAnalyticFunction:
    """Order ``m = len(components)`` poly-analytic function.

    With ``normalized=True`` the constructor checks membership in the
    normalized class (``F_z(0) = 1`` and every ``f_k(0) = 0``) to within
    ``NORMALIZATION_TOL`` and refuses to build otherwise. Sampled checks
    cannot tell ``<`` from ``<=``, so bound hypotheses on the components are
    always treated as non-strict.
    """

    components: tuple[AnalyticFunction, ...]
    normalized: bool = field(default=False)

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ParameterError("a poly-analytic function needs at least one component")
        for f in comps:
            if not isinstance(f, AnalyticFunction):
                raise ParameterError(f"component {f!r} is not an AnalyticFunction")
        object.__setattr__(self, "components", comps)
        if self.normalized:
            self._check_normalization()

    @property
    def m(self) -> int:
        return len(self.components)

    def _check_normalization(self):
        for k, f in enumerate(self.components):
            if abs(f(0.0)) > NORMALIZATION_TOL:
                raise ParameterError(f"f_{k}(0) = {f(0.0)} is not 0")
        dz = wirtinger(self, 0.0).dz
        if abs(dz - 1) > NORMALIZATION_TOL:
            raise ParameterError(f"F_z(0) = {dz} is not 1")

    def __call__(self, z):
        return eval_poly(self, z)


def eval_poly(F: PolyAnalyticFunction, z):
    arr, scalar = _disc_points(z)
    zbar = np.conj(arr)
    total = np.zeros_like(arr)
    power = np.ones_like(arr)
    for f in F.components:
        total = total + power * f._value(arr)
        power = power * zbar
    return _wrap(total, scalar)


def wirtinger(F: PolyAnalyticFunction, z):
    """``(F_z, F_zbar)`` from the component closed forms.

    ``F_z = sum conj(z)**k f_k'(z)`` and ``F_zbar = sum k conj(z)**(k-1) f_k(z)``.
    """
    arr, scalar = _disc_points(z)
    zbar = np.conj(arr)
    dz = np.zeros_like(arr)
    dzbar = np.zeros_like(arr)
    power = np.ones_like(arr)  # conj(z)**k
    prev = np.zeros_like(arr)  # conj(z)**(k-1), zero for k = 0
    for k, f in enumerate(F.components):
        dz = dz + power * f._derivative(arr)
        if k:
            dzbar = dzbar + k * prev * f._value(arr)
        prev = power
        power = power * zbar
    return WirtingerPair(_wrap(dz, scalar), _wrap(dzbar, scalar))


def dilatation_bounds(F: PolyAnalyticFunction, z):
    """``(Lambda_F, lambda_F) = (|F_z| + |F_zbar|, ||F_z| - |F_zbar||)``."""
    w = wirtinger(F, z)
    a, b = np.abs(w.dz), np.abs(w.dzbar)
    big, small = a + b, np.abs(a - b)
    if np.ndim(big) == 0:
        return float(big), float(small)
    return big, small


def make_extremal_F0(Lambda0: float, tail: Sequence[float] = ()) -> PolyAnalyticFunction:
    """``L0**2 z + (L0**3 - L0) log(1 - z/L0) - sum_k conj(z)**k Lambda_k z``.

    Attains the derivative hypotheses of the third class with equality in the
    tail, which makes both its univalence radius and covering radius sharp.
    """
    if not (math.isfinite(Lambda0) and Lambda0 > 1):
        raise ParameterError(f"Lambda0 must exceed 1, got {Lambda0}")
    tail = [float(t) for t in tail]
    for k, lam in enumerate(tail, start=1):
        if not (math.isfinite(lam) and lam >= 0):
            raise ParameterError(f"Lambda_{k} must be >= 0, got {lam}")
    comps = [LogDistortionExtremal(Lambda0)] + [ScaledIdentity(-lam) for lam in tail]
    return PolyAnalyticFunction(tuple(comps), normalized=True)
