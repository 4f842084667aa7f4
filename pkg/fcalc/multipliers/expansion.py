"""
Chain-rule expansion of m_{a,mu}(x) = psi(a(|x|^2)), psi(y) = (1+y)^{-mu/2}.

For a multi-index I of distinct axes,

    d_I m = sum over set partitions {B_1..B_r} of I of
            A_r * (1+a)^{-mu/2} * prod_q [ 2^|B_q| x^{B_q} a^(|B_q|)(|x|^2) / (1+a) ]

with A_r = prod_{j<r} (-mu/2 - j), i.e. psi^(r)(y) = A_r (1+y)^{-mu/2-r}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Tuple

import numpy as np

from ..symbols.presets import falling_product

Block = Tuple[int, ...]
Partition = Tuple[Block, ...]


@lru_cache(maxsize=None)
def set_partitions(items: Tuple[int, ...]) -> Tuple[Partition, ...]:
    if not items:
        return ((),)
    head, rest = items[0], items[1:]
    out = []
    for partition in set_partitions(rest):
        out.append(((head,),) + partition)
        for idx, block in enumerate(partition):
            merged = tuple(sorted((head,) + block))
            out.append(partition[:idx] + (merged,) + partition[idx + 1 :])
    return tuple(out)


def chain_coefficient(mu: float, r: int) -> float:
    """A_r for psi(y) = (1+y)^{-mu/2}."""
    return falling_product(-mu / 2.0, r)


def subsets(items: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def monomial(x: np.ndarray, axes: Tuple[int, ...]) -> np.ndarray:
    out = np.ones(x.shape[1:])
    for axis in axes:
        out = out * x[axis]
    return out


def expand_partial(
    I: Tuple[int, ...],
    x: np.ndarray,
    relative_deriv: Callable[[int, np.ndarray], np.ndarray],
    mu: float,
) -> np.ndarray:
    """The partition sum divided by m_{a,mu}; multiply by m to get d_I m."""
    t = np.sum(x * x, axis=0)
    total = np.zeros(x.shape[1:])
    cache = {}
    for partition in set_partitions(tuple(I)):
        term = np.full(x.shape[1:], chain_coefficient(mu, len(partition)))
        for block in partition:
            k = len(block)
            if k not in cache:
                cache[k] = relative_deriv(k, t)
            term = term * (2.0 ** k) * monomial(x, block) * cache[k]
        total = total + term
    return total
