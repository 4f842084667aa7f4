from __future__ import annotations

from typing import Any, Optional


class FcalcError(Exception):
    """Base exception for the fcalc library."""


class ParameterError(FcalcError, ValueError):
    """A parameter is outside its admissible range."""


class GridError(FcalcError):
    """Invalid grid construction or grid-level operation."""


class GridMismatchError(GridError):
    """Two objects live on different grids, or an array does not fit its grid."""


class NonFiniteError(GridError):
    """An operation produced NaN or Inf values."""


class ClassPreconditionError(ParameterError):
    """The product beta*s is below 4n, so the symbol class is undefined."""

    def __init__(self, beta: float, s: float, n: int, message: str | None = None):
        self.beta = beta
        self.s = s
        self.n = n
        if message is None:
            message = f"class requires beta*s >= 4n; got beta*s = {beta * s:g} < {4 * n}"
        super().__init__(message)


class SymbolCapabilityError(FcalcError):
    """The symbol does not supply a derivative of the requested order."""

    def __init__(self, label: str, order: int, available: int):
        self.label = label
        self.order = order
        self.available = available
        super().__init__(f"symbol {label!r} supplies derivatives up to order {available}, need {order}")


class ResolutionError(FcalcError):
    """Spectral weights overflow the floating range: the field is under-resolved."""


class KernelHypothesisError(ParameterError):
    """The kernel is only square integrable when beta*s > 4n."""


class CertificationError(FcalcError):
    """A theorem's hypotheses could not be certified for the requested run."""


class PresetCertificateError(CertificationError, ParameterError):
    """Preset parameters fall outside the window of the backing theorem."""

    def __init__(self, preset: str, constraint: str, message: str | None = None):
        self.preset = preset
        self.constraint = constraint
        if message is None:
            message = f"preset {preset!r} rejected: requires {constraint}"
        super().__init__(message)


class NonConvergenceError(FcalcError):
    """Fixed-point iteration stopped without meeting its tolerance."""

    def __init__(self, message: str, result: Optional[Any] = None):
        self.result = result
        super().__init__(message)


class DivergenceError(NonConvergenceError):
    """Residual grew over too many consecutive steps."""
