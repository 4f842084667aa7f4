from __future__ import annotations

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from ..errors import SymbolCapabilityError
from ..symbols.ladder import SampleLadder
from .expansion import monomial, subsets
from .models import AlphaEntry, MultiplierReport, MultiplierSpec, RegimeReport

logger = logging.getLogger(__name__)

DEFAULT_MULTIPLIER_LADDER = SampleLadder(first_exponent=-8, last_exponent=14, points_per_rung=32, threshold=0.0)
RANDOM_DIRECTIONS = 16
STABLE_LOW = 0.5
STABLE_HIGH = 2.0


def sample_directions(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Signed axis directions plus `count` seeded random unit vectors, shape (n, d)."""
    eye = np.eye(n)
    axes = np.concatenate([eye, -eye], axis=1)
    raw = rng.standard_normal((n, count))
    norms = np.linalg.norm(raw, axis=0)
    raw = raw[:, norms > 0] / norms[norms > 0]
    return np.concatenate([axes, raw], axis=1)


def _shell() -> np.ndarray:
    return np.unique(np.concatenate([np.linspace(0.5, 2.0, 151), [1.0]]))


def _radius_groups(ladder: SampleLadder, include_origin: bool) -> List[np.ndarray]:
    rungs = ladder.rungs()
    base = [rungs[0], _shell()]
    if include_origin:
        base.append(np.array([0.0, 1e-9, 1e-7]))
    return [np.concatenate(base)] + rungs[1:]


def _alpha_entry(spec: MultiplierSpec, alpha: Tuple[int, ...], directions: np.ndarray, groups: List[np.ndarray]) -> AlphaEntry:
    sups = []
    for radii in groups:
        pts = directions[:, :, None] * radii[None, None, :]
        with np.errstate(invalid="ignore", over="ignore"):
            vals = np.abs(monomial(pts, alpha) * spec.partial(alpha, pts))
        sups.append(float(np.max(vals)) if np.all(np.isfinite(vals)) else math.inf)
    cumulative = np.maximum.accumulate(np.array(sups))
    coarse, fine = float(cumulative[-2]), float(cumulative[-1])
    if not math.isfinite(fine):
        ratio = 0.0
    elif coarse == fine:
        ratio = 1.0
    else:
        ratio = coarse / fine
    passed = math.isfinite(fine) and STABLE_LOW <= ratio <= STABLE_HIGH
    return AlphaEntry(alpha=alpha, sup=fine, ratio=ratio, passed=bool(passed))


def _coverage(spec: MultiplierSpec, s: Optional[float]) -> Tuple[bool, str]:
    if spec.kind == "m_mu":
        if s is None:
            return True, "order s not supplied; pass reported without coverage check"
        if spec.mu >= s * (1.0 - 1e-12):
            return True, "mu >= s"
        return False, "mu < s: outside the multiplier theorem, pass not asserted"
    if spec.kind == "varphi":
        return True, "r > 0"
    return True, "empirical only"


def mikhlin_certify(
    spec: MultiplierSpec,
    n: int,
    ladder: Optional[SampleLadder] = None,
    *,
    s: Optional[float] = None,
    seed: int = 0,
    directions: int = RANDOM_DIRECTIONS,
) -> MultiplierReport:
    """Sample |x^alpha D^alpha m| for every alpha <= (1,..,1) and fit sup constants.

    Two regimes are reported: "full" includes the origin, "punctured" stops at
    the smallest ladder radius. Symbols singular at zero are judged on the
    punctured regime.
    """
    ladder = ladder or DEFAULT_MULTIPLIER_LADDER
    if spec.max_order < n:
        raise SymbolCapabilityError(spec.label, n, spec.max_order)
    rng = np.random.default_rng(seed)
    dirs = sample_directions(n, directions, rng)
    alphas = list(subsets(tuple(range(n))))

    regimes = {}
    for name, include_origin in (("full", True), ("punctured", False)):
        groups = _radius_groups(ladder, include_origin)
        regimes[name] = RegimeReport(name=name, entries=[_alpha_entry(spec, alpha, dirs, groups) for alpha in alphas])

    primary = "punctured" if spec.singular_at_zero else "full"
    if spec.singular_at_zero:
        logger.warning("%s: derivative singular at 0, certification excludes the origin ball", spec.label)
    covered, note = _coverage(spec, s)
    return MultiplierReport(
        spec=spec,
        n=int(n),
        regimes=regimes,
        primary=primary,
        covered=covered,
        coverage_note=note,
        sample_spec=f"{ladder.describe()}; shell 0.5..2; {dirs.shape[1]} directions",
        seed=int(seed),
    )
