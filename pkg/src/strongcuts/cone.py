"""Transitive fanin cones, optionally truncated to a node budget."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .netlist_io import Dag, NodeKind


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class Cone:
    """Single-sink subgraph rooted at ``root``.

    ``nodes`` are DAG node ids in ascending order. Cone lines are re-indexed
    densely in ascending DAG edge id; ``lines[i]`` is the ``(tail, head)``
    pair of cone line ``i`` and ``line_map[i]`` its DAG edge id.
    """

    root: int
    nodes: tuple[int, ...]
    lines: tuple[tuple[int, int], ...]
    inputs: frozenset[int]
    line_map: tuple[int, ...]

    @property
    def line_count(self) -> int:
        return len(self.lines)

    @cached_property
    def index(self) -> dict[int, int]:
        """DAG node id -> position in ``nodes``."""
        return {v: i for i, v in enumerate(self.nodes)}

    @cached_property
    def edge_index(self) -> dict[int, int]:
        """DAG edge id -> cone line id."""
        return {e: i for i, e in enumerate(self.line_map)}

    @cached_property
    def local_lines(self) -> tuple[tuple[int, int], ...]:
        """Cone lines with endpoints given as positions in ``nodes``."""
        idx = self.index
        return tuple((idx[t], idx[h]) for t, h in self.lines)

    @cached_property
    def local_topo(self) -> tuple[int, ...]:
        """Local node positions in a topological order of the cone."""
        n = len(self.nodes)
        indeg = [0] * n
        succ: list[list[int]] = [[] for _ in range(n)]
        for t, h in self.local_lines:
            succ[t].append(h)
            indeg[h] += 1
        stack = [v for v in range(n - 1, -1, -1) if indeg[v] == 0]
        order = []
        while stack:
            v = stack.pop()
            order.append(v)
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return tuple(order)


def all_roots(dag: Dag) -> list[int]:
    """Every gate id, ascending."""
    return [n.id for n in dag.nodes if n.kind is NodeKind.GATE]


def extract_cone(dag: Dag, root: int, size_limit: int | None = None) -> Cone:
    """Reverse breadth-first fanin cone of ``root``.

    Within a BFS level nodes are expanded in ascending id. As soon as
    expanding a node would push the node count past ``size_limit`` the whole
    expansion stops and every unexpanded node becomes a cone input. The root
    itself is always expanded, so the smallest cone returned is the root
    plus its direct fanins.
    """
    if not 0 <= root < dag.node_count:
        raise ConeError(f"node {root} not in DAG")
    if dag.is_input(root):
        raise ConeError("cone undefined for inputs")

    included = {root}
    expanded: set[int] = set()
    level = [root]
    stopped = False
    while level and not stopped:
        nxt: list[int] = []
        for v in sorted(level):
            new = sorted({dag.edges[e].tail for e in dag.fanins[v]} - included)
            if (
                size_limit is not None
                and v != root
                and len(included) + len(new) > size_limit
            ):
                stopped = True
                break
            expanded.add(v)
            included.update(new)
            nxt.extend(new)
        level = nxt

    line_ids = sorted(e for v in expanded for e in dag.fanins[v])
    return Cone(
        root=root,
        nodes=tuple(sorted(included)),
        lines=tuple((dag.edges[e].tail, dag.edges[e].head) for e in line_ids),
        inputs=frozenset(included - expanded | {v for v in expanded if dag.is_input(v)}),
        line_map=tuple(line_ids),
    )
