"""Weyl dimensions and dimensions of the closed orbit in P(V) for SL_n."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import GLWeight, InvalidInput, weight_partition


def weyl_dim(w: GLWeight) -> int:
    """``prod_{i<j} (w_i - w_j + j - i) / (j - i)``, in exact integers."""
    if not w.is_dominant():
        raise InvalidInput(f"weight {list(w.entries)} is not dominant")
    e = w.entries
    num, den = 1, 1
    for i in range(w.n):
        for j in range(i + 1, w.n):
            num *= e[i] - e[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"Weyl product not integral for {list(e)}")
    return q


@dataclass(frozen=True)
class DynkinRemoval:
    n: int
    removed: frozenset[int]
    component_sizes: tuple[int, ...]


def removed_nodes(w: GLWeight) -> frozenset[int]:
    """Nodes ``j`` of the A_(n-1) diagram such that the Young diagram has a column of length ``j``."""
    p = weight_partition(w).padded(w.n)
    return frozenset(j for j in range(1, w.n) if p[j - 1] > p[j])


def dynkin_removal(w: GLWeight) -> DynkinRemoval:
    removed = removed_nodes(w)
    sizes = []
    run = 0
    for j in range(1, w.n):
        if j in removed:
            if run:
                sizes.append(run)
            run = 0
        else:
            run += 1
    if run:
        sizes.append(run)
    return DynkinRemoval(w.n, removed, tuple(sizes))


def variety_dim(w: GLWeight) -> int:
    """Dimension of the orbit of the highest-weight line, ``(n^2 - n - sum(k^2 + k)) / 2``."""
    sizes = dynkin_removal(w).component_sizes
    twice = w.n * w.n - w.n - sum(k * k + k for k in sizes)
    return twice // 2
