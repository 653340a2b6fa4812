"""Exception types shared across the package."""


class PolyLandauError(Exception):
    """Base class for all package errors."""


class ParameterError(PolyLandauError, ValueError):
    """A parameter violates the invariants of the object being built."""


class DomainError(PolyLandauError, ValueError):
    """An evaluation point lies outside the open unit disc."""


class ConvergenceError(PolyLandauError, RuntimeError):
    """A root finder or minimiser exhausted its iteration budget."""


class PreconditionError(PolyLandauError, ValueError):
    """A verification check was asked to run outside its valid range."""


class HypothesisError(PolyLandauError, ValueError):
    """A sampled function does not satisfy the hypotheses of the check."""


class InfeasibleError(PolyLandauError, ValueError):
    """No witness exists for the requested construction."""
