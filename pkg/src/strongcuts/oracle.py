"""Exhaustive reference implementations for cross-checking the pipeline.

Nothing here reuses the pipeline's algorithms: paths are found by plain
depth-first search over the cone's ``(tail, head)`` pairs and candidate sets
are enumerated with :mod:`itertools`. Size guards keep the blowup bounded.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

import numpy as np

from .cone import Cone
from .cuts import LineCut, NodeCut
from .mis_enum import MisSet
from .netlist_io import Dag, make_dag


class OracleSizeError(ValueError):
    pass


def _succ_lists(cone: Cone) -> dict[int, list[tuple[int, int]]]:
    succ: dict[int, list[tuple[int, int]]] = {v: [] for v in cone.nodes}
    for i, (t, h) in enumerate(cone.lines):
        succ[t].append((i, h))
    return succ


def _descendants(cone: Cone) -> dict[int, set[int]]:
    """Nodes reachable from each node by a path of length >= 0 (DFS)."""
    succ = _succ_lists(cone)
    out: dict[int, set[int]] = {}
    for v in cone.nodes:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for _, w in succ[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out[v] = seen
    return out


def _reaches_root(cone: Cone, succ, removed: set[int]) -> bool:
    seen = set(cone.inputs)
    stack = list(cone.inputs)
    while stack:
        u = stack.pop()
        if u == cone.root:
            return True
        for i, w in succ[u]:
            if i not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def brute_strong_cuts(cone: Cone, k: int) -> set[LineCut]:
    """Every line subset of size <= k that disconnects, is minimal and has
    no two lines on one directed path."""
    m = cone.line_count
    if m > 20:
        raise OracleSizeError(f"cone has {m} lines; oracle limit is 20")
    succ = _succ_lists(cone)
    desc = _descendants(cone)
    lines = cone.lines

    def dependent(a: int, b: int) -> bool:
        return lines[b][0] in desc[lines[a][1]] or lines[a][0] in desc[lines[b][1]]

    found = set()
    for r in range(1, min(k, m) + 1):
        for subset in itertools.combinations(range(m), r):
            if any(dependent(a, b) for a, b in itertools.combinations(subset, 2)):
                continue
            removed = set(subset)
            if _reaches_root(cone, succ, removed):
                continue
            if all(_reaches_root(cone, succ, removed - {x}) for x in subset):
                found.add(LineCut(cone.root, subset))
    return found


def is_strong_cut_by_search(cone: Cone, lines: Iterable[int]) -> bool:
    """Definition check for a single line set by plain graph search.

    Polynomial per call, so unlike :func:`brute_strong_cuts` it has no size
    guard and can spot-check cuts of large cones.
    """
    subset = sorted(set(lines))
    if not subset:
        return False
    succ = _succ_lists(cone)
    removed = set(subset)
    if _reaches_root(cone, succ, removed):
        return False
    desc = _descendants(cone)
    for a, b in itertools.combinations(subset, 2):
        (ta, ha), (tb, hb) = cone.lines[a], cone.lines[b]
        if tb in desc[ha] or ta in desc[hb]:
            return False
    return all(_reaches_root(cone, succ, removed - {x}) for x in subset)


def brute_min_cut(cone: Cone, capacity: Sequence[float]) -> float:
    """Smallest number of finite-capacity lines whose removal disconnects
    the inputs from the root; ``inf`` if no such set exists."""
    finite = [i for i in range(cone.line_count) if capacity[i] != math.inf]
    if len(finite) > 15:
        raise OracleSizeError("more than 15 finite-capacity lines")
    succ = _succ_lists(cone)
    for r in range(0, len(finite) + 1):
        for subset in itertools.combinations(finite, r):
            if not _reaches_root(cone, succ, set(subset)):
                return r
    return math.inf


def _matrix(graph) -> np.ndarray:
    m = getattr(graph, "matrix", graph)
    return np.asarray(m, dtype=bool)


def brute_mis(graph, k: int) -> set[MisSet]:
    """All independent, maximal vertex subsets of size <= k.

    ``graph`` is a square boolean adjacency matrix or anything exposing
    one as ``.matrix``.
    """
    adj = _matrix(graph)
    n = adj.shape[0]
    if n > 20:
        raise OracleSizeError(f"graph has {n} vertices; oracle limit is 20")
    nbr = [set(np.flatnonzero(adj[v]).tolist()) for v in range(n)]
    found = set()
    for r in range(1, min(k, n) + 1):
        for subset in itertools.combinations(range(n), r):
            if any(b in nbr[a] for a, b in itertools.combinations(subset, 2)):
                continue
            chosen = set(subset)
            if all(v in chosen or nbr[v] & chosen for v in range(n)):
                found.add(MisSet(subset))
    return found


def brute_min_mis(graph, required: Iterable[int]) -> int | None:
    """Size of the smallest MIS containing every vertex of ``required``.

    Iterative deepening over independent supersets; ``None`` if no MIS
    contains the set (possible only for the empty graph).
    """
    adj = _matrix(graph)
    n = adj.shape[0]
    if n > 18:
        raise OracleSizeError(f"graph has {n} vertices; oracle limit is 18")
    req = sorted(set(required))
    nbr = [set(np.flatnonzero(adj[v]).tolist()) for v in range(n)]
    for a, b in itertools.combinations(req, 2):
        if b in nbr[a]:
            raise ValueError(f"required vertices {a} and {b} are adjacent")
    if n == 0:
        return None

    def maximal(chosen: set[int]) -> bool:
        return all(v in chosen or nbr[v] & chosen for v in range(n))

    def extend(chosen: set[int], start: int, budget: int) -> bool:
        if maximal(chosen):
            return True
        if budget == 0:
            return False
        for v in range(start, n):
            if v not in chosen and not nbr[v] & chosen:
                if extend(chosen | {v}, v + 1, budget - 1):
                    return True
        return False

    for extra in range(0, n - len(req) + 1):
        if extend(set(req), 0, extra):
            return len(req) + extra
    return None


def brute_unidirectional_node_cuts(cone: Cone, k: int) -> set[NodeCut]:
    """Node cuts of all S-T bipartitions (inputs in S, root in T) whose
    crossing lines all point from S to T and number at most ``k``."""
    if len(cone.nodes) > 14:
        raise OracleSizeError(f"cone has {len(cone.nodes)} nodes; oracle limit is 14")
    free = [v for v in cone.nodes if v not in cone.inputs and v != cone.root]
    found = set()
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            s_side = set(cone.inputs) | set(extra)
            crossing = []
            ok = True
            for t, h in cone.lines:
                if (t in s_side) and (h not in s_side):
                    crossing.append(t)
                elif (t not in s_side) and (h in s_side):
                    ok = False
                    break
            if ok and len(crossing) <= k:
                found.add(NodeCut(cone.root, tuple(sorted(set(crossing)))))
    return found


def random_layered_dag(
    n_nodes: int,
    n_inputs: int,
    seed: int,
    width: int | None = None,
    max_fanin: int = 2,
    edge_prob: float = 0.85,
    window: int = 3,
) -> Dag:
    """Seeded layered DAG with AIG-like fanin.

    Inputs form layer 0; gates fill layers of ``width`` nodes. Each gate
    takes one fanin from the previous layer and, with probability
    ``edge_prob`` per further slot, more fanins from the last ``window``
    layers (so at most ``max_fanin`` in total).
    """
    if n_inputs < 1 or n_nodes <= n_inputs:
        raise ValueError("need at least one input and one gate")
    rng = np.random.default_rng(seed)
    width = width or max(1, n_inputs)
    layers: list[list[int]] = [list(range(n_inputs))]
    nxt = n_inputs
    while nxt < n_nodes:
        size = min(width, n_nodes - nxt)
        layers.append(list(range(nxt, nxt + size)))
        nxt += size

    pairs = []
    for li in range(1, len(layers)):
        recent = [v for layer in layers[max(0, li - window):li] for v in layer]
        for g in layers[li]:
            fanins = {int(rng.choice(layers[li - 1]))}
            for _ in range(max_fanin - 1):
                if rng.random() < edge_prob:
                    fanins.add(int(rng.choice(recent)))
            pairs.extend((f, g) for f in sorted(fanins))
    return make_dag(n_nodes, pairs)


def random_cone_corpus(
    count: int,
    seed: int,
    max_nodes: int = 12,
    max_lines: int = 18,
    min_lines: int = 4,
) -> list[tuple[Dag, Cone]]:
    """Seeded list of ``(dag, full cone)`` pairs within the oracle limits."""
    from .cone import all_roots, extract_cone

    rng = np.random.default_rng(seed)
    corpus: list[tuple[Dag, Cone]] = []
    attempt = 0
    while len(corpus) < count:
        attempt += 1
        n_nodes = int(rng.integers(3, max_nodes + 1))
        n_inputs = int(rng.integers(1, min(4, n_nodes - 1) + 1))
        dag = random_layered_dag(
            n_nodes,
            n_inputs,
            seed=int(rng.integers(2**31)),
            width=int(rng.integers(1, 4)),
            edge_prob=float(rng.uniform(0.5, 1.0)),
            window=int(rng.integers(1, 4)),
        )
        roots = all_roots(dag)
        # Late gates have the deepest cones.
        root = roots[-1 - int(rng.integers(min(3, len(roots))))]
        cone = extract_cone(dag, root)
        if min_lines <= cone.line_count <= max_lines and len(cone.nodes) <= max_nodes:
            corpus.append((dag, cone))
    return corpus


def brute_ldg_adjacency(cone: Cone) -> np.ndarray:
    """Line adjacency from explicit path enumeration: two lines are adjacent
    iff some input-to-root path contains both."""
    m = cone.line_count
    if m > 20:
        raise OracleSizeError(f"cone has {m} lines; oracle limit is 20")
    succ = _succ_lists(cone)
    adj = np.zeros((m, m), dtype=bool)

    def walk(u: int, used: list[int]) -> None:
        if u == cone.root:
            for a, b in itertools.combinations(used, 2):
                adj[a, b] = adj[b, a] = True
            return
        for i, w in succ[u]:
            used.append(i)
            walk(w, used)
            used.pop()

    for v in sorted(cone.inputs):
        walk(v, [])
    return adj
