from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np


@dataclass(frozen=True)
class SampleLadder:
    """Geometric |x| ladder: rung r covers [2^(first+r), 2^(first+r+1)].

    Defaults: |x| from 2^0 to 2^14, 64 log-spaced samples per octave,
    R = rho = 1, and a 1e-6 ball cut out for symbols singular at zero.
    """

    first_exponent: int = 0
    last_exponent: int = 14
    points_per_rung: int = 64
    threshold: float = 1.0
    origin_ball: float = 1e-6

    def __post_init__(self) -> None:
        if self.last_exponent <= self.first_exponent + 1:
            raise ValueError("ladder needs at least two rungs")
        if self.points_per_rung < 2:
            raise ValueError("ladder needs at least two points per rung")

    @property
    def rung_count(self) -> int:
        return self.last_exponent - self.first_exponent

    def rungs(self) -> List[np.ndarray]:
        out = []
        for r in range(self.rung_count):
            lo = self.first_exponent + r
            radii = np.logspace(lo, lo + 1, self.points_per_rung + 1, base=2.0)
            out.append(radii[radii > self.threshold])
        return out

    def inner_radii(self, singular_at_zero: bool) -> np.ndarray:
        """Radii in [0, R] used for the nonnegativity check."""
        start = self.origin_ball if singular_at_zero else 0.0
        return np.linspace(start, self.threshold, self.points_per_rung + 1)

    def all_radii(self, singular_at_zero: bool = False) -> np.ndarray:
        return np.concatenate([self.inner_radii(singular_at_zero)] + self.rungs())

    def describe(self) -> str:
        return (
            f"|x| in 2^{self.first_exponent}..2^{self.last_exponent}, "
            f"{self.points_per_rung} per octave, R=rho={self.threshold:g}"
        )


DEFAULT_LADDER = SampleLadder()
