# fcalc/__init__.py
from .calculus import Calculus, apply_A, apply_Ts, embedding_audit, h_norm, kernel_K, make_calculus, sobolev_norm
from .errors import (
    CertificationError,
    ClassPreconditionError,
    FcalcError,
    GridError,
    NonConvergenceError,
    ParameterError,
    ResolutionError,
)
from .grid import Field, Grid, SpectralField, forward_transform, inverse_transform, lp_norm, make_grid, radial_project
from .multipliers import MultiplierReport, mikhlin_certify
from .presets import Preset, build_preset, list_presets
from .solvers import Problem, SolveResult, solve_contraction, solve_linear, solve_localized, solve_radial
from .symbols import ClassReport, Symbol, check_class

__all__ = [
    "Calculus",
    "CertificationError",
    "ClassPreconditionError",
    "ClassReport",
    "FcalcError",
    "Field",
    "Grid",
    "GridError",
    "MultiplierReport",
    "NonConvergenceError",
    "ParameterError",
    "Preset",
    "Problem",
    "ResolutionError",
    "SolveResult",
    "SpectralField",
    "Symbol",
    "apply_A",
    "apply_Ts",
    "build_preset",
    "check_class",
    "embedding_audit",
    "forward_transform",
    "h_norm",
    "inverse_transform",
    "kernel_K",
    "list_presets",
    "lp_norm",
    "make_calculus",
    "make_grid",
    "mikhlin_certify",
    "radial_project",
    "sobolev_norm",
    "solve_contraction",
    "solve_linear",
    "solve_localized",
    "solve_radial",
]
