from .builders import (
    Certificate,
    Preset,
    fnls_window,
    l2_window,
    preset_allen_cahn,
    preset_benjamin_ono,
    preset_cubic_l2,
    preset_fnls,
    preset_gp,
    preset_l2_theory,
    preset_peierls_nabarro,
    preset_power,
)
from .growth import GrowthFit, fit_growth_constant
from .nonlinearities import NONLINEARITIES, make_nonlinearity
from .registry import PRESETS, PresetInfo, build_preset, list_presets

__all__ = [
    "Certificate",
    "GrowthFit",
    "NONLINEARITIES",
    "PRESETS",
    "Preset",
    "PresetInfo",
    "build_preset",
    "fit_growth_constant",
    "fnls_window",
    "l2_window",
    "list_presets",
    "make_nonlinearity",
    "preset_allen_cahn",
    "preset_benjamin_ono",
    "preset_cubic_l2",
    "preset_fnls",
    "preset_gp",
    "preset_l2_theory",
    "preset_peierls_nabarro",
    "preset_power",
]
