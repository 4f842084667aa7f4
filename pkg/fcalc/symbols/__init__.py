from .classcheck import (
    check_class,
    check_ellipticity,
    class_nesting_check,
    class_nesting_reports,
    finite_difference_check,
    g3_exponent,
)
from .ladder import DEFAULT_LADDER, SampleLadder
from .models import ClassReport, ConstantFit, ExpSymbol, Symbol
from .presets import (
    SYMBOL_KINDS,
    exp_symbol,
    falling_product,
    fractional_symbol,
    laplace_symbol,
    oscillatory_symbol,
    pure_fractional_symbol,
    scaled_fractional_symbol,
)

__all__ = [
    "ClassReport",
    "ConstantFit",
    "DEFAULT_LADDER",
    "ExpSymbol",
    "SYMBOL_KINDS",
    "SampleLadder",
    "Symbol",
    "check_class",
    "check_ellipticity",
    "class_nesting_check",
    "class_nesting_reports",
    "exp_symbol",
    "falling_product",
    "finite_difference_check",
    "fractional_symbol",
    "g3_exponent",
    "laplace_symbol",
    "oscillatory_symbol",
    "pure_fractional_symbol",
    "scaled_fractional_symbol",
]
