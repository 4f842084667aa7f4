from .models import (
    Field,
    Grid,
    SpectralField,
    constant_field,
    cyclic_shift,
    field_from_function,
    make_grid,
    radial_field,
    refine,
    require_same_grid,
    zero_field,
)
from .norms import dual_exponent, lp_norm, lp_values, parse_exponent
from .radial import is_radial, radial_defect, radial_project, shell_defect, symmetry_classes
from .serialize import format_field_csv, format_number, read_field_csv, write_field_csv
from .transform import apply_multiplier, forward_transform, inverse_transform, real_values, spectral_l2_norm

__all__ = [
    "Field",
    "Grid",
    "SpectralField",
    "apply_multiplier",
    "constant_field",
    "cyclic_shift",
    "dual_exponent",
    "field_from_function",
    "format_field_csv",
    "format_number",
    "forward_transform",
    "inverse_transform",
    "is_radial",
    "lp_norm",
    "lp_values",
    "make_grid",
    "parse_exponent",
    "radial_defect",
    "radial_field",
    "radial_project",
    "read_field_csv",
    "real_values",
    "refine",
    "require_same_grid",
    "shell_defect",
    "spectral_l2_norm",
    "symmetry_classes",
    "write_field_csv",
    "zero_field",
]
