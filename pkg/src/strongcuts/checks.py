"""Property suites cross-checking the pipeline against the exhaustive oracles.

Used by ``strongcuts verify``; each check returns violations instead of
raising so a run can report every failing property with a counterexample.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .cone import Cone, all_roots, extract_cone
from .cuts import CutChecker, CutInvariantError, Direction, line_cut_to_node_cut, mis_to_line_cut
from .ldg import build_ldg
from .maxflow import ABOVE_BOUND
from .mis_enum import MisSet, enumerate_mis
from .netlist_io import Dag, write_edgelist
from .prune import min_mis_pair, min_mis_single, prune_ldg

PROPERTIES = (
    "ldg_paths",
    "ldg_orientation",
    "cut_equivalence",
    "cuts_are_mis",
    "cuts_unidirectional",
    "node_cut_equivalence",
    "bound_single",
    "bound_pair",
    "pruning_keeps_mis",
    "deletion_sound",
    "edge_sound",
    "mis_exact",
)


@dataclass
class Violation:
    prop: str
    detail: str
    dag: str
    root: int
    k: int
    offending: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "property": self.prop,
            "detail": self.detail,
            "root": self.root,
            "k": self.k,
            "offending": self.offending,
            "dag": self.dag,
        }


def _sets(items) -> set[tuple[int, ...]]:
    return {tuple(sorted(x)) for x in items}


def check_cone(dag: Dag, cone: Cone, k: int) -> tuple[Counter, list[Violation]]:
    """Run every property on one cone; returns (checks performed, violations)."""
    counts: Counter = Counter()
    bad: list[Violation] = []

    def fail(prop: str, detail: str, offending=()) -> None:
        bad.append(Violation(prop, detail, write_edgelist(dag), cone.root, k, list(offending)))

    ldg = build_ldg(cone)
    adj = ldg.matrix

    counts["ldg_paths"] += 1
    paths_adj = oracle.brute_ldg_adjacency(cone)
    if not np.array_equal(adj, paths_adj):
        diff = np.argwhere(adj != paths_adj)[0].tolist()
        fail("ldg_paths", "LDG adjacency differs from path containment", diff)

    counts["ldg_orientation"] += 1
    prec = ldg.precedes
    closure = (prec.astype(np.uint8) @ prec.astype(np.uint8)) > 0
    if (closure & ~prec).any() or prec.diagonal().any():
        fail("ldg_orientation", "dependency orientation is not a strict partial order")

    brute_cuts = _sets(c.lines for c in oracle.brute_strong_cuts(cone, k))
    brute_mis = _sets(m.members for m in oracle.brute_mis(ldg, k))
    counts["cuts_are_mis"] += 1
    if brute_cuts != brute_mis:
        fail("cuts_are_mis", "strong cuts differ from LDG MISs", sorted(brute_cuts ^ brute_mis))

    pruned = prune_ldg(cone, ldg, k)
    emitted = [m.members for m in enumerate_mis(pruned, k)]
    counts["mis_exact"] += 1
    if len(emitted) != len(set(emitted)) or set(emitted) != brute_mis:
        fail("mis_exact", "enumerate_mis differs from brute_mis", sorted(set(emitted) ^ brute_mis))

    checker = CutChecker(cone)
    cuts = []
    for members in emitted:
        try:
            cuts.append(mis_to_line_cut(cone, MisSet(members), checker))
        except CutInvariantError as exc:
            fail("cut_equivalence", str(exc), list(members))
    counts["cut_equivalence"] += 1
    got = {c.lines for c in cuts}
    if got != brute_cuts or len(got) != len(cuts):
        fail("cut_equivalence", "pipeline cuts differ from brute force", sorted(got ^ brute_cuts))

    node_cuts = set()
    for cut in cuts:
        counts["cuts_unidirectional"] += 1
        if checker.partition(cut.lines).classification is not Direction.UNIDIRECTIONAL:
            fail("cuts_unidirectional", "emitted cut is bidirectional", list(cut.lines))
        node_cuts.add(line_cut_to_node_cut(cone, cut).nodes)
    if len(cone.nodes) <= 14:
        counts["node_cut_equivalence"] += 1
        uni = {nc.nodes for nc in oracle.brute_unidirectional_node_cuts(cone, k)}
        if uni != node_cuts:
            fail("node_cut_equivalence", "unidirectional node cuts differ", sorted(uni ^ node_cuts))

    if ldg.vertex_count <= 18:
        for v in range(ldg.vertex_count):
            counts["bound_single"] += 1
            bound = min_mis_single(cone, ldg, v, k)
            exact = oracle.brute_min_mis(ldg, [v])
            if exact is not None and bound != ABOVE_BOUND and bound > exact:
                fail("bound_single", f"flow bound {bound} > min MIS {exact}", [v])
            if bound == ABOVE_BOUND and exact is not None and exact <= k:
                fail("bound_single", f"AboveBound but min MIS is {exact}", [v])
        for u, v in itertools.combinations(range(ldg.vertex_count), 2):
            if adj[u, v]:
                continue
            counts["bound_pair"] += 1
            bound = min_mis_pair(cone, ldg, u, v, k)
            exact = oracle.brute_min_mis(ldg, [u, v])
            if exact is not None and bound != ABOVE_BOUND and bound > exact:
                fail("bound_pair", f"flow bound {bound} > min MIS {exact}", [u, v])
            if bound == ABOVE_BOUND and exact is not None and exact <= k:
                fail("bound_pair", f"AboveBound but min MIS is {exact}", [u, v])

    pruned_adj = np.zeros_like(adj)
    for a in pruned.surviving:
        for b in pruned.surviving:
            pruned_adj[a, b] = pruned.adjacent(a, b)
    for members in brute_mis:
        counts["pruning_keeps_mis"] += 1
        s = set(members)
        if s & pruned.deleted:
            fail("pruning_keeps_mis", "MIS uses a deleted vertex", list(members))
            continue
        independent = not any(pruned_adj[a, b] for a, b in itertools.combinations(members, 2))
        maximal = all(
            v in s or any(pruned_adj[v, x] for x in members) for v in pruned.surviving
        )
        if not (independent and maximal):
            fail("pruning_keeps_mis", "MIS of base is not an MIS of the pruned graph", list(members))

    in_small = set(itertools.chain.from_iterable(brute_mis))
    for v in pruned.deleted:
        counts["deletion_sound"] += 1
        if v in in_small:
            fail("deletion_sound", "deleted vertex lies in a small MIS", [v])
    for u, v in pruned.added:
        counts["edge_sound"] += 1
        if any(u in m and v in m for m in brute_mis):
            fail("edge_sound", "added edge joins members of a small MIS", [u, v])
    return counts, bad


def verify_random(
    seed: int, trials: int, max_nodes: int, k: int
) -> tuple[Counter, list[Violation]]:
    """Run :func:`check_cone` over every oracle-sized cone of ``trials``
    seeded random DAGs with at most ``max_nodes`` nodes."""
    rng = np.random.default_rng(seed)
    counts: Counter = Counter()
    bad: list[Violation] = []
    for _ in range(trials):
        n = int(rng.integers(3, max(3, max_nodes) + 1))
        n_in = int(rng.integers(1, min(4, n - 1) + 1))
        dag = oracle.random_layered_dag(
            n, n_in, seed=int(rng.integers(2**31)), width=int(rng.integers(1, 4))
        )
        for root in all_roots(dag):
            cone = extract_cone(dag, root)
            if cone.line_count > 18 or len(cone.nodes) > 14:
                continue
            c, b = check_cone(dag, cone, k)
            counts.update(c)
            bad.extend(b)
    return counts, bad
