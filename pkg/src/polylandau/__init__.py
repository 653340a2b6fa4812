"""Landau-type univalence and covering radii for bounded poly-analytic functions."""

__version__ = "0.1.0"

from .analytic import (  # noqa: E402
    BlaschkeTypeExtremal,
    ClassicalLandauExtremal,
    LogDistortionExtremal,
    PowerSeries,
    ScaledIdentity,
    deriv,
    evaluate,
    taylor_coefficients,
)
from .polyanalytic import (  # noqa: E402
    PolyAnalyticFunction,
    dilatation_bounds,
    eval_poly,
    make_extremal_F0,
    wirtinger,
)
from .radii import (  # noqa: E402
    F1,
    F2,
    F3,
    RootFindConfig,
    bilipschitz,
    classical_landau,
    harmonic_landau_constants,
    solve_radius,
    theorem_c_radius,
    theorem_d_radius,
    theorem_e_radius,
)

__all__ = [
    "__version__",
    "BlaschkeTypeExtremal",
    "ClassicalLandauExtremal",
    "LogDistortionExtremal",
    "PowerSeries",
    "ScaledIdentity",
    "deriv",
    "evaluate",
    "taylor_coefficients",
    "PolyAnalyticFunction",
    "dilatation_bounds",
    "eval_poly",
    "make_extremal_F0",
    "wirtinger",
    "F1",
    "F2",
    "F3",
    "RootFindConfig",
    "bilipschitz",
    "classical_landau",
    "harmonic_landau_constants",
    "solve_radius",
    "theorem_c_radius",
    "theorem_d_radius",
    "theorem_e_radius",
]
