from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Tuple, Union

import numpy as np

from ..errors import GridError, GridMismatchError, NonFiniteError

SUPPORTED_DIMENSIONS = (1, 2, 3)


@dataclass(frozen=True, eq=False)
class Grid:
    """Periodic tensor grid on [-L, L)^n with N nodes per axis.

    Node j on each axis sits at -L + j*h, h = 2L/N. Frequencies are stored in
    FFT order: xi_k = (pi/L)*k with k = 0..N/2-1, -N/2..-1.
    """

    n: int
    N: int
    L: float

    def __post_init__(self) -> None:
        if self.n not in SUPPORTED_DIMENSIONS:
            raise GridError(f"unsupported dimension n={self.n}; expected one of {SUPPORTED_DIMENSIONS}")
        if int(self.N) != self.N or self.N < 4 or self.N % 2:
            raise GridError(f"N must be an even integer >= 4, got {self.N}")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise GridError(f"L must be positive and finite, got {self.L}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "L", float(self.L))

    @property
    def spacing(self) -> float:
        return 2.0 * self.L / self.N

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.n

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.N,) * self.n

    @property
    def size(self) -> int:
        return self.N ** self.n

    @property
    def freq_spacing(self) -> float:
        return math.pi / self.L

    @cached_property
    def axis_nodes(self) -> np.ndarray:
        return -self.L + self.spacing * np.arange(self.N)

    @cached_property
    def axis_offsets(self) -> np.ndarray:
        """Integer node offsets from the origin: x_j = offset_j * h."""
        return np.arange(self.N) - self.N // 2

    @cached_property
    def axis_modes(self) -> np.ndarray:
        """Integer wave numbers k in FFT order."""
        return np.fft.fftfreq(self.N, d=1.0 / self.N).astype(int)

    @cached_property
    def axis_freqs(self) -> np.ndarray:
        return self.freq_spacing * self.axis_modes

    @cached_property
    def points(self) -> np.ndarray:
        """Node coordinates, shape (n, N, ..., N)."""
        mesh = np.meshgrid(*([self.axis_nodes] * self.n), indexing="ij")
        return np.stack(mesh)

    @cached_property
    def radius(self) -> np.ndarray:
        offsets = np.meshgrid(*([self.axis_offsets] * self.n), indexing="ij")
        shell = sum(o.astype(float) ** 2 for o in offsets)
        return self.spacing * np.sqrt(shell)

    @cached_property
    def freq_points(self) -> np.ndarray:
        mesh = np.meshgrid(*([self.axis_freqs] * self.n), indexing="ij")
        return np.stack(mesh)

    @cached_property
    def freq_sq(self) -> np.ndarray:
        """|xi|^2 on the frequency lattice (FFT order)."""
        modes = np.meshgrid(*([self.axis_modes] * self.n), indexing="ij")
        return self.freq_spacing ** 2 * sum(m.astype(float) ** 2 for m in modes)

    @cached_property
    def phase_sign(self) -> np.ndarray:
        """(-1)^(k_1+...+k_n): the phase e^{i xi_k L} from the box offset."""
        modes = np.meshgrid(*([self.axis_modes] * self.n), indexing="ij")
        return np.where(sum(modes) % 2 == 0, 1.0, -1.0)

    def compatible(self, other: "Grid") -> bool:
        return self is other or (self.n == other.n and self.N == other.N and self.L == other.L)

    def describe(self) -> str:
        return f"n={self.n} N={self.N} L={self.L!r}"


def make_grid(n: int, N: int, L: float) -> Grid:
    return Grid(n=int(n), N=N, L=L)


def refine(grid: Grid, factor_N: int = 2, factor_L: float = 2.0) -> Grid:
    return Grid(n=grid.n, N=grid.N * int(factor_N), L=grid.L * float(factor_L))


def _frozen_array(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class Field:
    """Real samples of a scalar function on the nodes of a Grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float)
        if arr.shape != self.grid.shape:
            if arr.size == self.grid.size:
                arr = arr.reshape(self.grid.shape)
            else:
                raise GridMismatchError(f"values of shape {arr.shape} do not fit grid {self.grid.describe()}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteError("field contains NaN or Inf")
        object.__setattr__(self, "values", _frozen_array(arr))

    def _operand(self, other: Union["Field", float]) -> Union[np.ndarray, float]:
        if isinstance(other, Field):
            require_same_grid(self.grid, other.grid)
            return other.values
        return float(other)

    def __add__(self, other: Union["Field", float]) -> "Field":
        return Field(self.grid, self.values + self._operand(other))

    __radd__ = __add__

    def __sub__(self, other: Union["Field", float]) -> "Field":
        return Field(self.grid, self.values - self._operand(other))

    def __rsub__(self, other: float) -> "Field":
        return Field(self.grid, self._operand(other) - self.values)

    def __mul__(self, other: Union["Field", float]) -> "Field":
        return Field(self.grid, self.values * self._operand(other))

    __rmul__ = __mul__

    def __truediv__(self, other: float) -> "Field":
        return Field(self.grid, self.values / float(other))

    def __neg__(self) -> "Field":
        return Field(self.grid, -self.values)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))


@dataclass(frozen=True, eq=False)
class SpectralField:
    """Complex coefficients on the frequency lattice (FFT order)."""

    grid: Grid
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=complex)
        if arr.shape != self.grid.shape:
            raise GridMismatchError(f"coefficients of shape {arr.shape} do not fit grid {self.grid.describe()}")
        object.__setattr__(self, "coeffs", _frozen_array(arr))

    def hermitian_defect(self) -> float:
        """Relative max |F(-k) - conj F(k)| over the paired modes."""
        c = self.coeffs
        mirrored = c
        for axis in range(c.ndim):
            mirrored = np.roll(np.flip(mirrored, axis=axis), 1, axis=axis)
        scale = max(float(np.max(np.abs(c))), np.finfo(float).tiny)
        return float(np.max(np.abs(mirrored - np.conj(c)))) / scale


def require_same_grid(a: Grid, b: Grid) -> None:
    if not a.compatible(b):
        raise GridMismatchError(f"grid mismatch: {a.describe()} vs {b.describe()}")


def zero_field(grid: Grid) -> Field:
    return Field(grid, np.zeros(grid.shape))


def constant_field(grid: Grid, value: float) -> Field:
    return Field(grid, np.full(grid.shape, float(value)))


def field_from_function(grid: Grid, func: Callable[[np.ndarray], np.ndarray]) -> Field:
    """Sample func(points) where points has shape (n, N, ..., N)."""
    values = np.broadcast_to(np.asarray(func(grid.points), dtype=float), grid.shape)
    return Field(grid, values)


def radial_field(grid: Grid, profile: Callable[[np.ndarray], np.ndarray]) -> Field:
    """Sample profile(|x|)."""
    return Field(grid, np.asarray(profile(grid.radius), dtype=float))


def cyclic_shift(f: Field, shift: Union[int, Tuple[int, ...]]) -> Field:
    shifts = (shift,) * f.grid.n if isinstance(shift, int) else tuple(shift)
    if len(shifts) != f.grid.n:
        raise GridMismatchError(f"shift {shifts} does not match dimension {f.grid.n}")
    return Field(f.grid, np.roll(f.values, shifts, axis=tuple(range(f.grid.n))))
