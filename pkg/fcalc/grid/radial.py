"""
Radial symmetrization
=====================
Nodes are grouped by their orbit under the symmetries of the periodic lattice:
sign flips of each offset (taken mod N, so the -N/2 node is its own mirror)
and permutations of the axes. Every node of an orbit has the same |x|, the
multiplier weights of the calculus are invariant under the same group, and so
projection onto orbit averages leaves sampled radial fields untouched and
commutes with T_s.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .models import Field, Grid


def symmetry_classes(grid: Grid) -> np.ndarray:
    """Orbit label of every node (flattened, row-major)."""
    half = grid.N // 2
    folded = np.abs(grid.axis_offsets)
    mesh = np.meshgrid(*([folded] * grid.n), indexing="ij")
    stacked = np.sort(np.stack([m.ravel() for m in mesh]), axis=0)
    labels = np.zeros(grid.size, dtype=np.int64)
    for row in stacked:
        labels = labels * (half + 1) + row
    return labels


def _class_extremes(flat: np.ndarray, labels: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    order = np.argsort(labels, kind="stable")
    sorted_labels = labels[order]
    starts = np.flatnonzero(np.r_[True, sorted_labels[1:] != sorted_labels[:-1]])
    lows = np.minimum.reduceat(flat[order], starts)
    highs = np.maximum.reduceat(flat[order], starts)
    return sorted_labels[starts], lows, highs


def radial_project(f: Field) -> Field:
    """Replace each value by the mean over its symmetry class.

    Classes whose values already agree are left bit-for-bit untouched, so the
    projection is exactly idempotent.
    """
    labels = symmetry_classes(f.grid)
    # unique keys come back sorted, in the same order as _class_extremes
    _, inverse = np.unique(labels, return_inverse=True)
    inverse = inverse.ravel()
    flat = f.values.ravel()
    means = np.bincount(inverse, weights=flat) / np.bincount(inverse)

    _, lows, highs = _class_extremes(flat, labels)
    uniform = lows == highs
    means[uniform] = lows[uniform]

    return Field(f.grid, means[inverse].reshape(f.grid.shape))


def radial_defect(f: Field) -> float:
    """max |f - radial_project(f)|."""
    return float(np.max(np.abs(f.values - radial_project(f).values)))


def is_radial(f: Field, tol: float = 1e-12) -> bool:
    scale = max(f.max_abs(), 1.0)
    return radial_defect(f) <= tol * scale


def shell_defect(values: np.ndarray, grid: Grid) -> float:
    """Largest spread of values within a symmetry class; 0 for a radial sample."""
    flat = np.asarray(values, dtype=float).reshape(-1)
    _, lows, highs = _class_extremes(flat, symmetry_classes(grid))
    return float(np.max(highs - lows))
