"""Per-root orchestration: cone -> LDG -> prune -> MIS -> strong line cut."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .cone import all_roots, extract_cone
from .cuts import CutChecker, line_cut_to_node_cut, mis_to_line_cut
from .ldg import build_ldg
from .mis_enum import MisEnumStats, enumerate_mis
from .netlist_io import Dag
from .prune import prune_ldg


@dataclass(frozen=True)
class CutRecord:
    root: int
    lines: tuple[tuple[int, int], ...]
    node_cut: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.lines)

    @property
    def node_cut_size(self) -> int:
        return len(self.node_cut)

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "lines": [list(p) for p in self.lines],
            "node_cut": list(self.node_cut),
            "size": self.size,
            "node_cut_size": self.node_cut_size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_csv(self) -> str:
        lines = ";".join(f"{t}-{h}" for t, h in self.lines)
        nodes = ";".join(map(str, self.node_cut))
        return f"{self.root},{lines},{nodes},{self.size},{self.node_cut_size}"


CSV_HEADER = "root,lines,node_cut,size,node_cut_size"


@dataclass
class RootStats:
    root: int
    cone_nodes: int = 0
    ldg_vertices: int = 0
    ldg_vertices_after: int = 0
    edges_added: int = 0
    candidates: int = 0
    cuts: int = 0
    prune_seconds: float = 0.0
    enum_seconds: float = 0.0


@dataclass
class CircuitStats:
    inputs: int
    nodes: int
    k: int
    cone_limit: int | None
    roots: list[RootStats] = field(default_factory=list)

    @property
    def total_cuts(self) -> int:
        return sum(r.cuts for r in self.roots)

    @property
    def total_candidates(self) -> int:
        return sum(r.candidates for r in self.roots)

    @property
    def prune_seconds(self) -> float:
        return sum(r.prune_seconds for r in self.roots)

    @property
    def enum_seconds(self) -> float:
        return sum(r.enum_seconds for r in self.roots)

    def to_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "nodes": self.nodes,
            "k": self.k,
            "cone_limit": self.cone_limit,
            "total_cuts": self.total_cuts,
            "total_candidates": self.total_candidates,
            "prune_seconds": self.prune_seconds,
            "enum_seconds": self.enum_seconds,
            "roots": [asdict(r) for r in self.roots],
        }


def root_cuts(
    dag: Dag,
    root: int,
    k: int,
    cone_limit: int | None = None,
    stats: RootStats | None = None,
    max_node_cut: int | None = None,
) -> Iterator[CutRecord]:
    """Stream the k-feasible strong line cuts of one root.

    Cuts come out in lexicographic order of their sorted cone line ids.
    ``max_node_cut`` additionally drops cuts whose node form is larger.
    """
    stats = stats if stats is not None else RootStats(root)
    cone = extract_cone(dag, root, cone_limit)
    ldg = build_ldg(cone)
    t0 = time.perf_counter()
    pruned = prune_ldg(cone, ldg, k)
    stats.prune_seconds += time.perf_counter() - t0
    stats.cone_nodes = len(cone.nodes)
    stats.ldg_vertices = ldg.vertex_count
    stats.ldg_vertices_after = ldg.vertex_count - len(pruned.deleted)
    stats.edges_added = len(pruned.added)

    t0 = time.perf_counter()
    checker = CutChecker(cone)
    counters = MisEnumStats()
    for mis in enumerate_mis(pruned, k, counters):
        cut = mis_to_line_cut(cone, mis, checker)
        node_cut = line_cut_to_node_cut(cone, cut)
        if max_node_cut is not None and node_cut.size > max_node_cut:
            continue
        record = CutRecord(root, tuple(cone.lines[i] for i in cut.lines), node_cut.nodes)
        stats.cuts += 1
        stats.candidates = counters.candidates
        stats.enum_seconds += time.perf_counter() - t0
        yield record
        t0 = time.perf_counter()
    stats.candidates = counters.candidates
    stats.enum_seconds += time.perf_counter() - t0


def _root_job(args) -> tuple[list[CutRecord], RootStats]:
    dag, root, k, cone_limit, max_node_cut = args
    stats = RootStats(root)
    cuts = list(root_cuts(dag, root, k, cone_limit, stats, max_node_cut))
    return cuts, stats


def enumerate_circuit(
    dag: Dag,
    k: int,
    roots: Iterable[int] | None = None,
    cone_limit: int | None = None,
    stats: CircuitStats | None = None,
    jobs: int = 1,
    max_node_cut: int | None = None,
) -> Iterator[CutRecord]:
    """Cuts of every selected root, ascending root id.

    With ``jobs > 1`` roots are farmed out to worker processes; each root's
    cuts are then held in memory until written, and output order is the
    same as the serial run.
    """
    roots = sorted(set(all_roots(dag) if roots is None else roots))
    if stats is None:
        stats = CircuitStats(len(dag.inputs), dag.node_count, k, cone_limit)
    if jobs <= 1 or len(roots) <= 1:
        for root in roots:
            rs = RootStats(root)
            stats.roots.append(rs)
            yield from root_cuts(dag, root, k, cone_limit, rs, max_node_cut)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = ((dag, r, k, cone_limit, max_node_cut) for r in roots)
        for cuts, rs in pool.map(_root_job, work):
            stats.roots.append(rs)
            yield from cuts


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1
