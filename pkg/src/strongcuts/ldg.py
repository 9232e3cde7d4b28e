"""Line dependency graph (LDG) of a cone.

Vertices are cone lines. Two lines are adjacent when some input-to-root
path contains both, i.e. when the head of one reaches the tail of the other.
Zero-length paths count, so consecutive lines sharing a node are dependent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cone import Cone


def reachability(cone: Cone) -> np.ndarray:
    """Reflexive reachability over cone nodes (local positions).

    ``reach[a, b]`` is true iff a directed path ``a ~> b`` exists inside the
    cone; ``reach[a, a]`` is always true.
    """
    n = len(cone.nodes)
    succ: list[list[int]] = [[] for _ in range(n)]
    for t, h in cone.local_lines:
        succ[t].append(h)
    reach = np.zeros((n, n), dtype=bool)
    for v in reversed(cone.local_topo):
        row = reach[v]
        row[v] = True
        for w in succ[v]:
            row |= reach[w]
    return reach


@dataclass(frozen=True, eq=False)
class Ldg:
    """Undirected LDG plus the orientation witnessing each adjacency.

    ``precedes[i, j]`` means line ``i`` comes before line ``j`` on some path.
    ``matrix`` (the symmetric closure) is the source of truth for adjacency.
    """

    precedes: np.ndarray

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "Ldg":
        """LDG-shaped wrapper around an arbitrary symmetric graph.

        The orientation is taken from the upper triangle; useful for feeding
        plain undirected graphs to the enumeration code.
        """
        m = np.asarray(matrix, dtype=bool)
        if m.shape[0] != m.shape[1] or (m != m.T).any() or m.diagonal().any():
            raise ValueError("matrix must be square, symmetric and irreflexive")
        return cls(np.triu(m, 1))

    @property
    def vertex_count(self) -> int:
        return self.precedes.shape[0]

    @cached_property
    def matrix(self) -> np.ndarray:
        m = self.precedes | self.precedes.T
        m.flags.writeable = False
        return m

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(np.flatnonzero(row).tolist()) for row in self.matrix)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as int bitsets (bit ``j`` set iff adjacent to ``j``)."""
        return tuple(sum(1 << j for j in nbrs) for nbrs in self.neighbors)

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.matrix[a, b])

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.matrix, 1))
        return list(zip(rows.tolist(), cols.tolist()))


def build_ldg(cone: Cone) -> Ldg:
    reach = reachability(cone)
    if not cone.lines:
        return Ldg(np.zeros((0, 0), dtype=bool))
    tails, heads = (np.array(x, dtype=np.intp) for x in zip(*cone.local_lines))
    precedes = reach[np.ix_(heads, tails)]
    precedes.flags.writeable = False
    return Ldg(precedes)


def dump_ldg(ldg: Ldg) -> str:
    """One ``u v`` edge per line, ``u < v``; a header gives the vertex count."""
    out = [f"# vertices {ldg.vertex_count}"]
    out.extend(f"{u} {v}" for u, v in ldg.edges())
    return "\n".join(out) + "\n"
