"""Dense adjacency for small orbit Cayley graphs and brute-force graph primitives.

Vertices are the 2^n integers; x ~ y iff the weight of x XOR y belongs to
the index set.  Everything here is deliberately direct (BFS, matrix
products) so it can serve as an oracle for the closed-form modules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import OrbitIndexSet
from .spectrum import _weight_table

EXPLICIT_MAX_N = 12  # 2^12 x 2^12 adjacency; raisable to the hard cap below
EXPLICIT_HARD_MAX_N = 14


def _row0(s: OrbitIndexSet) -> np.ndarray:
    """Adjacency row of vertex 0: row0[y] <=> weight(y) in I."""
    return np.isin(_weight_table(s.n), list(s.indices))


@dataclass(frozen=True)
class ExplicitGraph:
    """The 2^n-vertex graph as a dense boolean adjacency matrix."""

    index_set: OrbitIndexSet
    adjacency: np.ndarray

    @classmethod
    def build(cls, s: OrbitIndexSet, max_n: int = EXPLICIT_MAX_N) -> ExplicitGraph:
        if max_n > EXPLICIT_HARD_MAX_N:
            raise ValueError(f"cap {max_n} exceeds the hard limit {EXPLICIT_HARD_MAX_N}")
        if s.n > max_n:
            raise ValueError(f"n={s.n} exceeds the explicit-graph cap {max_n}")
        row0 = _row0(s)
        size = 1 << s.n
        xs = np.arange(size)
        # row x is row 0 translated by XOR; build per row to keep
        # intermediates O(2^n) rather than O(4^n) in the index dtype
        adjacency = np.empty((size, size), dtype=bool)
        for x in range(size):
            adjacency[x] = row0[xs ^ x]
        adjacency.setflags(write=False)
        return cls(s, adjacency)

    @property
    def size(self) -> int:
        return 1 << self.index_set.n

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2


def connected_component(adjacency: np.ndarray, start: int = 0) -> np.ndarray:
    """Boolean mask of the component containing ``start`` (frontier BFS)."""
    size = adjacency.shape[0]
    visited = np.zeros(size, dtype=bool)
    visited[start] = True
    frontier = adjacency[start].copy()
    frontier[start] = False
    while frontier.any():
        visited |= frontier
        frontier = adjacency[frontier].any(axis=0) & ~visited
    return visited


def is_connected_adjacency(adjacency: np.ndarray) -> bool:
    return bool(connected_component(adjacency).all())


def connected_components(adjacency: np.ndarray) -> list[np.ndarray]:
    """Vertex index arrays of all components, by smallest member."""
    size = adjacency.shape[0]
    seen = np.zeros(size, dtype=bool)
    out = []
    while not seen.all():
        start = int(np.flatnonzero(~seen)[0])
        mask = connected_component(adjacency, start)
        out.append(np.flatnonzero(mask))
        seen |= mask
    return out


def complement_adjacency(adjacency: np.ndarray) -> np.ndarray:
    comp = ~adjacency
    np.fill_diagonal(comp, False)
    return comp


def common_neighbor_matrix(adjacency: np.ndarray) -> np.ndarray:
    """counts[x, y] = number of common neighbors of x and y.

    Computed as A @ A through BLAS; float32 is exact because every count is
    below 2^24.
    """
    a = adjacency.astype(np.float32)
    return (a @ a).astype(np.int64)
