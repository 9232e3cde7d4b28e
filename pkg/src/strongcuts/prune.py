"""Flow-based pruning of an LDG for bounded MIS enumeration.

A vertex is deleted when a min-cut lower bound on the smallest MIS
containing it exceeds ``k``; a non-adjacent surviving pair is joined by a
new edge when the same bound for the pair exceeds ``k``. Every MIS of size
at most ``k`` of the original LDG remains an MIS of the pruned graph.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property

from .cone import Cone
from .ldg import Ldg
from .maxflow import INF, FlowError, FlowNet, augment, min_cut_value


@dataclass(frozen=True)
class PruneStats:
    vertices_before: int
    vertices_deleted: int
    edges_added: int
    flow_queries: int
    seconds: float


@dataclass(frozen=True, eq=False)
class PrunedLdg:
    base: Ldg
    deleted: frozenset[int]
    added: frozenset[tuple[int, int]]
    stats: PruneStats | None = field(default=None, compare=False)

    @cached_property
    def surviving(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.base.vertex_count) if v not in self.deleted)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Effective neighbourhood bitsets; deleted vertices get 0 and are
        excluded from every other vertex's mask."""
        keep = sum(1 << v for v in self.surviving)
        masks = [m & keep for m in self.base.masks]
        for u, v in self.added:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        for v in self.deleted:
            masks[v] = 0
        return tuple(masks)

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.masks[a] >> b & 1)


def _single_capacity(ldg: Ldg, line: int) -> list[float]:
    caps: list[float] = [1] * ldg.vertex_count
    for w in ldg.neighbors[line]:
        caps[w] = INF
    return caps


def min_mis_single(cone: Cone, ldg: Ldg, line: int, k: int) -> float:
    """Lower bound on the smallest MIS containing ``line``: the min-cut with
    every LDG neighbour of ``line`` made uncuttable.

    The value is exact up to ``k + 1``, which is enough to decide whether
    it exceeds ``k``; anything larger comes back as ABOVE_BOUND.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 <= line < ldg.vertex_count:
        raise ValueError(f"line {line} not in cone")
    return min_cut_value(FlowNet(cone, _single_capacity(ldg, line)), k + 1)


def min_mis_pair(cone: Cone, ldg: Ldg, u: int, v: int, k: int) -> float:
    """Pair version of :func:`min_mis_single`; neighbours of both lines are
    uncuttable, ``u`` and ``v`` themselves stay at capacity 1. Same
    ``k + 1`` reporting bound."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if u == v:
        raise ValueError("pair must consist of two distinct lines")
    if ldg.adjacent(u, v):
        raise ValueError(f"lines {u} and {v} are adjacent in the LDG")
    caps = _single_capacity(ldg, u)
    for w in ldg.neighbors[v]:
        caps[w] = INF
    return min_cut_value(FlowNet(cone, caps), k + 1)


def prune_ldg(cone: Cone, ldg: Ldg, k: int) -> PrunedLdg:
    """Delete vertices, then add edges between non-adjacent surviving pairs,
    testing each pair against the base adjacency only.

    The pair pass reuses the single-vertex flow of ``u`` as a starting point
    for every pair ``(u, v)``: raising capacities keeps a feasible flow
    feasible, so only the extra augmentations are paid for.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    start = time.perf_counter()
    m = ldg.vertex_count
    limit = k + 1
    big = k + 2
    net = FlowNet(cone, [1] * m)
    base_res = net.residual(k)
    # A max flow of the all-unit network stays feasible when capacities rise.
    base_flow = augment(net, base_res, 0, limit)
    if base_flow == 0:
        raise FlowError("sink unreachable from source")
    neighbors = ldg.neighbors
    queries = 0

    single: dict[int, tuple[int, list[int]]] = {}
    deleted = set()
    for v in range(m):
        res = base_res.copy()
        for w in neighbors[v]:
            res[2 * w] += big - 1
        flow = augment(net, res, base_flow, limit)
        queries += 1
        if flow > k:
            deleted.add(v)
        else:
            single[v] = (flow, res)

    added = set()
    masks = ldg.masks
    survivors = [v for v in range(m) if v not in deleted]
    for i, u in enumerate(survivors):
        flow_u, res_u = single[u]
        nbr_u = masks[u]
        for v in survivors[i + 1:]:
            if nbr_u >> v & 1:
                continue
            res = res_u.copy()
            for w in neighbors[v]:
                if not nbr_u >> w & 1:
                    res[2 * w] += big - 1
            queries += 1
            if augment(net, res, flow_u, limit) > k:
                added.add((u, v))

    stats = PruneStats(
        vertices_before=m,
        vertices_deleted=len(deleted),
        edges_added=len(added),
        flow_queries=queries,
        seconds=time.perf_counter() - start,
    )
    return PrunedLdg(ldg, frozenset(deleted), frozenset(added), stats)
