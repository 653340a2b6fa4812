"""Sample-scale certification of the radius and Lipschitz statements.

Every check returns a :class:`VerificationReport`. A report passes exactly
when ``worst_margin >= -slack``; the slack only absorbs floating point noise
and is recorded alongside the margin.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Any, NamedTuple, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .analytic import (
    AnalyticFunction,
    BlaschkeTypeExtremal,
    LogDistortionExtremal,
    ScaledIdentity,
    deriv,
    evaluate,
    taylor_coefficients,
)
from .errors import (
    ConvergenceError,
    HypothesisError,
    InfeasibleError,
    ParameterError,
    PreconditionError,
)
from .polyanalytic import PolyAnalyticFunction, eval_poly, make_extremal_F0
from .radii import (
    F1,
    F2,
    F3,
    ClassParams,
    RootFindConfig,
    bilipschitz,
    bisect_decreasing,
    schlicht_radius,
    solve_radius,
)

__all__ = [
    "DEFAULT_SLACK",
    "PairSampler",
    "BoundarySampler",
    "VerificationReport",
    "Collision",
    "check_colipschitz",
    "check_lipschitz",
    "check_schlicht",
    "collision_profile",
    "find_collision",
    "check_collision",
    "check_schwarz_pick",
    "check_coefficient_bounds",
    "geometric_ladder",
    "grid_injective",
    "brute_force_univalence_radius",
    "witness_function",
    "run_battery",
]

DEFAULT_SLACK = 1e-9
COLLISION_TOL = 1e-9
# the peak of g is only known to within the root tolerance
PEAK_GUARD = 1e-9


@dataclass(frozen=True)
class PairSampler:
    """Area-uniform random pairs in the closed disc of radius ``rho``."""

    seed: int
    count: int
    rho: float

    def __post_init__(self):
        if self.count < 1:
            raise ParameterError("count must be >= 1")
        if not 0 < self.rho < 1:
            raise ParameterError(f"rho must lie in (0, 1), got {self.rho}")

    def _points(self, rng):
        u = rng.random(self.count)
        a = rng.random(self.count)
        return self.rho * np.sqrt(u) * np.exp(2j * np.pi * a)

    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        rng = np.random.default_rng(self.seed)
        return self._points(rng), self._points(rng)


@dataclass(frozen=True)
class BoundarySampler:
    """Equally spaced points ``r exp(2 pi i j / n)`` starting on the positive axis."""

    r: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 8:
            raise ParameterError("n_points must be >= 8")
        if not 0 < self.r < 1:
            raise ParameterError(f"r must lie in (0, 1), got {self.r}")

    @property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_points) / self.n_points

    @property
    def step(self) -> float:
        return 2 * np.pi / self.n_points

    def points(self) -> np.ndarray:
        return self.r * np.exp(1j * self.angles)


@dataclass
class VerificationReport:
    check_name: str
    passed: bool
    worst_margin: float
    slack: float
    samples_used: int
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _c(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _report(name, margins, slack, samples, witness, details):
    worst = float(np.min(margins))
    return VerificationReport(name, bool(worst >= -slack), worst, slack, samples, witness, details)


def _difference_quotients(F, sampler):
    z1, z2 = sampler.pairs()
    dz = np.abs(z1 - z2)
    keep = dz > 0
    z1, z2, dz = z1[keep], z2[keep], dz[keep]
    dF = np.abs(eval_poly(F, z1) - eval_poly(F, z2))
    return z1, z2, dz, dF


def _check_rho(sampler, univalence_radius):
    if univalence_radius is not None and sampler.rho >= univalence_radius:
        raise PreconditionError(
            f"sample disc radius {sampler.rho} is not below the univalence radius {univalence_radius}"
        )


def _pair_witness(z1, z2, dz, dF, i):
    return {"z1": _c(z1[i]), "z2": _c(z2[i]), "dF": float(dF[i]), "dz": float(dz[i]),
            "quotient": float(dF[i] / dz[i])}


def check_colipschitz(
    F: PolyAnalyticFunction,
    sampler: PairSampler,
    l: float,  # noqa: E741
    *,
    univalence_radius: float | None = None,
    slack: float = DEFAULT_SLACK,
) -> VerificationReport:
    """``|F(z1) - F(z2)| >= l |z1 - z2|`` on sampled pairs."""
    _check_rho(sampler, univalence_radius)
    z1, z2, dz, dF = _difference_quotients(F, sampler)
    margins = dF - l * dz
    i = int(np.argmin(margins))
    q = dF / dz
    details = {"rho": sampler.rho, "seed": sampler.seed, "l": l,
               "min_quotient": float(q.min()), "max_quotient": float(q.max())}
    return _report("colipschitz", margins, slack, int(dz.size), _pair_witness(z1, z2, dz, dF, i), details)


def check_lipschitz(
    F: PolyAnalyticFunction,
    sampler: PairSampler,
    L: float,
    *,
    univalence_radius: float | None = None,
    slack: float = DEFAULT_SLACK,
) -> VerificationReport:
    """``|F(z1) - F(z2)| <= L |z1 - z2|`` on sampled pairs."""
    _check_rho(sampler, univalence_radius)
    z1, z2, dz, dF = _difference_quotients(F, sampler)
    margins = L * dz - dF
    i = int(np.argmin(margins))
    q = dF / dz
    details = {"rho": sampler.rho, "seed": sampler.seed, "L": L,
               "min_quotient": float(q.min()), "max_quotient": float(q.max())}
    return _report("lipschitz", margins, slack, int(dz.size), _pair_witness(z1, z2, dz, dF, i), details)


def check_schlicht(
    F: PolyAnalyticFunction,
    boundary: BoundarySampler,
    R: float,
    *,
    slack: float = DEFAULT_SLACK,
) -> VerificationReport:
    """``min |F|`` over the circle of radius ``boundary.r`` is at least ``R``.

    With ``F(0) = 0`` this places the disc of radius ``R`` inside the image
    of the univalence disc. ``boundary.r`` should be the univalence radius.
    """
    z = boundary.points()
    mod = np.abs(eval_poly(F, z))
    i = int(np.argmin(mod))
    theta = float(boundary.angles[i])
    # circular distance of the minimiser from angle 0
    offset = min(theta, 2 * np.pi - theta)
    details = {"r": boundary.r, "R": R, "minimum": float(mod[i]), "argmin_theta": theta,
               "argmin_offset": offset, "step": boundary.step}
    witness = {"z": _c(z[i]), "F": _c(eval_poly(F, z[i]))}
    return _report("schlicht", mod - R, slack, int(z.size), witness, details)


class Collision(NamedTuple):
    x1: float
    x2: float


def collision_profile(Lambda0: float, tail: Sequence[float]):
    """``g(x) = F0(x)`` on ``[0, 1]``: increasing up to ``r3``, decreasing after."""
    tail = tuple(float(t) for t in tail)

    def g(x):
        val = Lambda0 * Lambda0 * x + (Lambda0**3 - Lambda0) * math.log1p(-x / Lambda0)
        return val - sum(lam * x ** (k + 1) for k, lam in enumerate(tail, 1))

    return g


def find_collision(
    Lambda0: float,
    tail: Sequence[float],
    r: float,
    x1: float | None = None,
    cfg: RootFindConfig | None = None,
) -> Collision:
    """Two distinct real points in ``(0, r)`` where the extremal ``F0`` agrees.

    By default ``x1 = r3 + eps`` with ``eps = (r - r3)/2``, shrunk to
    ``(r' - r3)/2`` when ``g`` returns to zero at ``r' <= 1``. ``x2`` is found
    by bisection on the increasing branch ``(0, r3)``.
    """
    cfg = cfg or RootFindConfig()
    p = F3(Lambda0, tuple(tail))
    r3 = solve_radius(p, cfg).r
    if not (r3 < r <= 1):
        raise InfeasibleError(f"need r3 < r <= 1, got r = {r} with r3 = {r3}")
    g = collision_profile(p.Lambda0, p.Lambdas)
    if x1 is None:
        eps = (r - r3) / 2
        if g(1.0) <= 0:
            if g(1.0) == 0:
                r_zero = 1.0
            else:
                r_zero, _, _ = bisect_decreasing(g, r3, 1.0, cfg)
            eps = min(eps, (r_zero - r3) / 2)
        x1 = r3 + eps
    if not (r3 + PEAK_GUARD < x1 < r):
        raise InfeasibleError(f"x1 = {x1} must lie strictly inside (r3, r) = ({r3}, {r})")
    target = g(x1)
    if not target > 0:
        raise InfeasibleError(f"g(x1) = {target} is not above g(0) = 0; no partner on (0, r3)")
    try:
        x2, _, _ = bisect_decreasing(lambda x: target - g(x), 0.0, r3, cfg)
    except ConvergenceError as exc:
        raise InfeasibleError(f"no partner for x1 = {x1} on (0, r3)") from exc
    return Collision(float(x1), float(x2))


def check_collision(
    Lambda0: float,
    tail: Sequence[float],
    r: float,
    *,
    slack: float = COLLISION_TOL,
) -> VerificationReport:
    """Non-injectivity of ``F0`` on the disc of radius ``r > r3``."""
    x1, x2 = find_collision(Lambda0, tail, r)
    F0 = make_extremal_F0(Lambda0, tail)
    gap = abs(eval_poly(F0, x1) - eval_poly(F0, x2))
    witness = {"x1": x1, "x2": x2, "dF": gap, "separation": abs(x1 - x2)}
    return _report("collision", np.array([-gap]), slack, 2, witness, {"r": r})


def _disc_samples(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    u = rng.random(n)  # in [0, 1), so |z| < 1
    a = rng.random(n)
    return np.sqrt(u) * np.exp(2j * np.pi * a)


def check_schwarz_pick(
    f: AnalyticFunction,
    n_samples: int,
    *,
    seed: int = 0,
    slack: float = DEFAULT_SLACK,
) -> VerificationReport:
    """``(1 - |z|**2) |f'(z)| <= 1`` for a self-map of the disc."""
    z = _disc_samples(n_samples, seed)
    values = np.abs(evaluate(f, z))
    if np.any(values > 1 + slack):
        i = int(np.argmax(values))
        raise HypothesisError(f"|f(z)| = {values[i]} > 1 at z = {z[i]}; not a self-map")
    dist = (1 - np.abs(z) ** 2) * np.abs(deriv(f, z))
    i = int(np.argmax(dist))
    witness = {"z": _c(z[i]), "value": float(dist[i])}
    return _report("schwarz_pick", 1 - dist, slack, n_samples, witness,
                   {"seed": seed, "max_value": float(dist[i])})


def check_coefficient_bounds(
    f: AnalyticFunction,
    M: float,
    N: int,
    *,
    rho: float = 0.5,
    slack: float = DEFAULT_SLACK,
) -> VerificationReport:
    """``|a_n| <= M - 1/M`` for ``n = 2..N`` when ``|a_1| = 1`` and ``|f| <= M``."""
    ring = 0.9 * np.exp(2j * np.pi * np.arange(720) / 720)
    peak = float(np.max(np.abs(evaluate(f, ring))))
    if peak > M + slack:
        raise HypothesisError(f"sampled |f| reaches {peak} > M = {M} on |z| = 0.9")
    a = taylor_coefficients(f, N, rho)
    if abs(abs(a[1]) - 1) > 1e-6:
        raise HypothesisError(f"|a_1| = {abs(a[1])} is not 1")
    bound = M - 1 / M
    mods = np.array([abs(c) for c in a[2:]])
    margins = bound - mods
    i = int(np.argmin(margins))
    witness = {"n": i + 2, "abs_a_n": float(mods[i]), "bound": bound}
    details = {"abs_coefficients": [float(abs(c)) for c in a], "rho": rho}
    return _report("coefficients", margins, slack, N - 1, witness, details)


def geometric_ladder(r_min: float = 0.05, r_max: float = 0.99, ratio: float = 1.02) -> list[float]:
    rungs = []
    r = r_min
    while r <= r_max:
        rungs.append(r)
        r *= ratio
    return rungs


def _segments_cross(a, b, c, d):
    """Proper crossings between segment families ``ab`` and ``cd`` (broadcast)."""

    def orient(p, q, s):
        return np.sign(((q - p).conj() * (s - p)).imag)

    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return (o1 * o2 < 0) & (o3 * o4 < 0)


def _closed_curve_simple(w: np.ndarray) -> bool:
    n = w.size
    a, b = w, np.roll(w, -1)
    i, j = np.triu_indices(n, k=2)
    # the first and last segments share a vertex
    keep = ~((i == 0) & (j == n - 1))
    i, j = i[keep], j[keep]
    return not bool(np.any(_segments_cross(a[i], b[i], a[j], b[j])))


def grid_injective(F: PolyAnalyticFunction, r: float, grid_n: int, tol: float = 1e-12) -> dict[str, bool]:
    """Three discrete injectivity tests on a ``grid_n x grid_n`` polar grid of radius ``r``.

    * ``no_coincidence``: no two grid points map within ``tol`` of each other.
    * ``orientation``: every mapped grid triangle keeps its positive orientation.
    * ``simple_boundary``: the image of the outer ring is a simple polygon.
    """
    radii = r * np.arange(1, grid_n + 1) / grid_n
    theta = 2 * np.pi * np.arange(grid_n) / grid_n
    z = radii[:, None] * np.exp(1j * theta)[None, :]
    w = eval_poly(F, z)
    w0 = complex(eval_poly(F, 0.0))

    flat = np.concatenate([[w0], w.ravel()])
    pts = np.column_stack([flat.real, flat.imag])
    no_coincidence = len(cKDTree(pts).query_pairs(tol)) == 0

    def area(p, q, s):
        return ((q - p).conj() * (s - p)).imag

    nxt = np.roll(w, -1, axis=1)
    fan = area(np.full(grid_n, w0), w[0], nxt[0])
    lower = area(w[:-1], w[1:], nxt[1:])
    upper = area(w[:-1], nxt[1:], nxt[:-1])
    orientation = bool(np.all(fan > 0) and np.all(lower > 0) and np.all(upper > 0))

    return {
        "no_coincidence": no_coincidence,
        "orientation": orientation,
        "simple_boundary": _closed_curve_simple(w[-1]),
    }


def brute_force_univalence_radius(
    F: PolyAnalyticFunction,
    grid_n: int,
    ladder: Sequence[float] | None = None,
) -> float:
    """Largest ladder radius whose polar grid passes :func:`grid_injective`.

    An empirical estimate used for consistency trends, neither an upper nor
    a lower certificate. Returns 0.0 if even the smallest rung fails.
    """
    if grid_n < 16:
        raise ParameterError("grid_n must be >= 16")
    best = 0.0
    for r in ladder if ladder is not None else geometric_ladder():
        if not all(grid_injective(F, r, grid_n).values()):
            break
        best = r
    return best


def witness_function(p: ClassParams) -> PolyAnalyticFunction:
    """A member of class ``p`` that meets each tail bound with equality."""
    if isinstance(p, F3):
        return make_extremal_F0(p.Lambda0, p.Lambdas)
    if isinstance(p, F1):
        head: AnalyticFunction = LogDistortionExtremal(p.Lambda)
    elif isinstance(p, F2):
        head = BlaschkeTypeExtremal(p.M, 2) if p.M > 1 else ScaledIdentity(1.0)
    else:
        raise ParameterError(f"unknown class parameters {p!r}")
    comps = [head] + [ScaledIdentity(-t) for t in p.tail]
    return PolyAnalyticFunction(tuple(comps), normalized=True)


def run_battery(
    p: ClassParams,
    *,
    rho_frac: float = 0.9,
    seed: int = 42,
    pairs: int = 100_000,
    boundary_points: int = 720,
    r_offset: float = 0.05,
    checks: Sequence[str] | None = None,
    cfg: RootFindConfig | None = None,
) -> list[VerificationReport]:
    """Run the check battery on the witness function of class ``p``.

    ``checks`` selects from ``colipschitz``, ``lipschitz``, ``schlicht``,
    ``collision`` (third class only) and ``coefficients`` (second class with
    ``M > 1``); ``None`` runs every applicable one.
    """
    if not 0 < rho_frac < 1:
        raise ParameterError(f"rho-frac must lie in (0, 1), got {rho_frac}")
    res = solve_radius(p, cfg)
    F = witness_function(p)
    applicable = ["colipschitz", "lipschitz"]
    if not res.whole_disc:
        applicable.append("schlicht")
    if isinstance(p, F3):
        applicable.append("collision")
    if isinstance(p, F2) and p.M > 1:
        applicable.append("coefficients")
    if checks is None:
        checks = applicable
    for name in checks:
        if name not in applicable:
            raise ParameterError(f"check {name!r} does not apply to class {p.name}")

    rho = rho_frac * min(res.r, 1.0)
    reports = []
    if "colipschitz" in checks or "lipschitz" in checks:
        bounds = bilipschitz(p, rho, cfg)
        sampler = PairSampler(seed, pairs, rho)
        if "colipschitz" in checks:
            reports.append(check_colipschitz(F, sampler, bounds.l, univalence_radius=res.r))
        if "lipschitz" in checks:
            reports.append(check_lipschitz(F, sampler, bounds.L, univalence_radius=res.r))
    if "schlicht" in checks:
        reports.append(check_schlicht(F, BoundarySampler(res.r, boundary_points),
                                      schlicht_radius(p, res.r)))
    if "collision" in checks:
        reports.append(check_collision(p.Lambda0, p.Lambdas, min(1.0, res.r + r_offset)))
    if "coefficients" in checks:
        reports.append(check_coefficient_bounds(F.components[0], p.M, 8))
    return reports
