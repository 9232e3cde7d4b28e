"""Bounded s-t min-cut on networks whose arcs carry capacity 1 or infinity.

The network has one arc per cone line, an infinite arc from a super-source
to each cone input and an infinite arc from the root to a super-sink. Only
the predicate "min-cut exceeds ``bound``" is ever needed, so augmentation
stops after ``bound + 1`` units of flow. Every s-t path crosses a unit arc
or consists of infinite arcs only; either way one augmentation moves one
unit.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence

from .cone import Cone

INF = math.inf
#: Returned by :func:`min_cut_value` when the min-cut is larger than the bound.
ABOVE_BOUND = math.inf


class FlowError(RuntimeError):
    """Internal inconsistency: the sink is unreachable in a valid cone."""


class FlowNet:
    """Residual-graph skeleton for one cone.

    Vertices ``0..n-1`` are the cone's local node positions, ``n`` is the
    super-source and ``n + 1`` the super-sink. Arc ``2*i`` is the forward
    arc of cone line ``i`` and ``2*i + 1`` its reverse; auxiliary arc pairs
    follow the line arcs.
    """

    def __init__(self, cone: Cone, capacity: Sequence[float] | Mapping[int, float]):
        m = cone.line_count
        try:
            caps = [capacity[i] for i in range(m)]
        except (KeyError, IndexError):
            raise ValueError("capacity must be defined for every cone line") from None
        if any(c != 1 and c != INF for c in caps):
            raise ValueError("capacities must be 1 or INF")

        n = len(cone.nodes)
        self.source = n
        self.sink = n + 1
        self.vertex_count = n + 2
        self.line_count = m
        self.head: list[int] = []
        self.infinite: list[bool] = []
        self.adj: list[list[int]] = [[] for _ in range(n + 2)]
        for (t, h), c in zip(cone.local_lines, caps):
            self._add_arc(t, h, c == INF)
        idx = cone.index
        for v in sorted(idx[x] for x in cone.inputs):
            self._add_arc(self.source, v, True)
        self._add_arc(idx[cone.root], self.sink, True)

    def _add_arc(self, u: int, v: int, infinite: bool) -> None:
        a = len(self.head)
        self.head += [v, u]
        self.infinite += [infinite, False]
        self.adj[u].append(a)
        self.adj[v].append(a + 1)

    @property
    def arcs(self) -> list[tuple[int, int, float]]:
        """Forward arcs as ``(tail, head, capacity)``."""
        return [
            (self.head[a + 1], self.head[a], INF if self.infinite[a] else 1)
            for a in range(0, len(self.head), 2)
        ]

    def residual(self, bound: int) -> list[int]:
        """Initial residual capacities with infinity encoded as ``bound + 2``."""
        big = bound + 2
        res = [0] * len(self.head)
        for a in range(0, len(res), 2):
            res[a] = big if self.infinite[a] else 1
        return res


def build_flow_net(cone: Cone, capacity: Sequence[float] | Mapping[int, float]) -> FlowNet:
    return FlowNet(cone, capacity)


def augment(net: FlowNet, residual: list[int], flow: int, limit: int) -> int:
    """Push unit augmenting paths (shortest first) until ``flow == limit`` or
    no path remains. Mutates ``residual``; returns the new flow value."""
    adj, head = net.adj, net.head
    s, t = net.source, net.sink
    nv = net.vertex_count
    while flow < limit:
        parent = [-1] * nv
        parent[s] = -2
        queue = [s]
        for u in queue:
            for a in adj[u]:
                if residual[a] and parent[head[a]] == -1:
                    parent[head[a]] = a
                    queue.append(head[a])
            if parent[t] != -1:
                break
        else:
            break
        w = t
        while w != s:
            a = parent[w]
            residual[a] -= 1
            residual[a ^ 1] += 1
            w = head[a ^ 1]
        flow += 1
    return flow


def min_cut_value(net: FlowNet, bound: int) -> float:
    """Max-flow value if it is at most ``bound``, else :data:`ABOVE_BOUND`."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    flow = augment(net, net.residual(bound), 0, bound + 1)
    if flow == 0:
        raise FlowError("sink unreachable from source")
    return flow if flow <= bound else ABOVE_BOUND
