from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from ..errors import ParameterError
from ..grid.models import Grid
from . import builders
from .builders import L2_BASIS, MASSIVE_BASIS, Preset


@dataclass(frozen=True)
class PresetInfo:
    name: str
    basis: str
    window: str
    parameters: Tuple[str, ...]
    builder: Callable[..., Preset]

    def pairs(self) -> List[Tuple[str, Any]]:
        return [
            (f"{self.name}.basis", self.basis),
            (f"{self.name}.window", self.window),
            (f"{self.name}.parameters", list(self.parameters)),
        ]


PRESETS: Dict[str, PresetInfo] = {
    info.name: info
    for info in (
        PresetInfo("gp", MASSIVE_BASIS, "m != 0, 0 < gamma < 1, s > 4n/gamma", ("m", "gamma", "s", "V", "alpha", "C", "h", "g"), builders.preset_gp),
        PresetInfo("allen_cahn", MASSIVE_BASIS, "m != 0, 0 < gamma < 1, s > 4n/gamma, rho radial", ("m", "gamma", "s", "kappa", "rho"), builders.preset_allen_cahn),
        PresetInfo("power", MASSIVE_BASIS, "m != 0, 0 < gamma < 1, s > 4n/gamma, rho radial", ("m", "gamma", "s", "beta_pow", "rho"), builders.preset_power),
        PresetInfo("l2_theory", L2_BASIS, "(n/2)(delta/(1+delta)) < gamma < 1", ("gamma", "kappa", "V", "delta_growth", "C", "h", "g"), builders.preset_l2_theory),
        PresetInfo("benjamin_ono", L2_BASIS, "n/4 < gamma < 1", ("gamma", "forcing"), builders.preset_benjamin_ono),
        PresetInfo("cubic_l2", L2_BASIS, "n/3 < gamma < 1", ("gamma", "forcing"), builders.preset_cubic_l2),
        PresetInfo("peierls_nabarro", L2_BASIS, "(n/2)(delta/(1+delta)) < gamma < 1, d radial", ("gamma", "kappa", "d", "delta_growth"), builders.preset_peierls_nabarro),
        PresetInfo(
            "fnls",
            f"{L2_BASIS} | {MASSIVE_BASIS}",
            "a0: beta/(2(beta+1)) < gamma < 1 (n=1), beta/(beta+1) < gamma < 1 (n=2); massive: s = 2 > 4n/gamma",
            ("m", "s_nls", "mu", "p_pow", "route", "linear_split"),
            builders.preset_fnls,
        ),
    )
}


def list_presets() -> List[PresetInfo]:
    return list(PRESETS.values())


def build_preset(name: str, grid: Grid, **params: Any) -> Preset:
    try:
        info = PRESETS[name]
    except KeyError:
        raise ParameterError(f"unknown preset {name!r}; expected one of {sorted(PRESETS)}") from None
    return info.builder(grid, **params)
