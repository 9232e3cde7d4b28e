"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Tolerances are pinned as module constants below.
"""

import itertools
import random
import time

import pytest

from strongcuts import (
    ABOVE_BOUND,
    CircuitStats,
    build_ldg,
    enumerate_circuit,
    enumerate_mis,
    extract_cone,
    line_cut_to_node_cut,
    min_mis_pair,
    min_mis_single,
    prune_ldg,
)
from strongcuts.cli import main
from strongcuts.cuts import CutChecker, CutInvariantError, Direction, mis_to_line_cut
from strongcuts.netlist_io import write_aiger
from strongcuts.oracle import (
    brute_min_mis,
    brute_mis,
    brute_strong_cuts,
    brute_unidirectional_node_cuts,
    is_strong_cut_by_search,
    random_cone_corpus,
    random_layered_dag,
)

import mutation
from conftest import ACCEPTANCE_RESULTS, LINE_NAMES

CORPUS_SIZE = 300
CORPUS_SEED = 7
CORPUS_MAX_NODES = 12
CORPUS_MAX_LINES = 18
CORPUS_MAX_FANIN = 2
KS = (2, 3, 4)
EQUIVALENCE_SECONDS = 60.0
BOUND_CHECK_MAX_VERTICES = 18
NODE_CUT_MAX_NODES = 12
PINNED_BOUND = 3
PERF_NODES = 400
PERF_INPUTS = 36
PERF_K = 6
PERF_SECONDS = 120.0
DETERMINISM_NODES = 245
DETERMINISM_INPUTS = 36
DETERMINISM_K = 6
SPOT_CHECK_CUTS = 100
MUTATION_CONES = 100
MUTATION_K = 3


def report(criterion, passed, detail):
    line = f"{'PASS' if passed else 'FAIL'} AC{criterion}: {detail}"
    ACCEPTANCE_RESULTS.append(line)
    print(line)
    assert passed, line


@pytest.fixture(scope="module")
def corpus():
    return random_cone_corpus(
        CORPUS_SIZE, seed=CORPUS_SEED, max_nodes=CORPUS_MAX_NODES, max_lines=CORPUS_MAX_LINES
    )


def pipeline_cuts(cone, k):
    """Run prune -> enumerate -> convert; returns (line id tuples, aborted)."""
    ldg = build_ldg(cone)
    checker = CutChecker(cone)
    out = []
    try:
        for mis in enumerate_mis(prune_ldg(cone, ldg, k), k):
            out.append(mis_to_line_cut(cone, mis, checker).lines)
    except CutInvariantError:
        return out, True
    return out, False


def equivalence_failures(cones, ks):
    bad = 0
    for (_, cone), k in itertools.product(cones, ks):
        got, aborted = pipeline_cuts(cone, k)
        expected = {c.lines for c in brute_strong_cuts(cone, k)}
        if aborted or len(got) != len(set(got)) or set(got) != expected:
            bad += 1
    return bad


def mis_failures(cones, ks):
    bad = 0
    for (_, cone), k in itertools.product(cones, ks):
        cuts = {c.lines for c in brute_strong_cuts(cone, k)}
        if cuts != {m.members for m in brute_mis(build_ldg(cone), k)}:
            bad += 1
    return bad


def unidirectional_failures(cones, ks):
    bad = 0
    for (_, cone), k in itertools.product(cones, ks):
        if len(cone.nodes) > NODE_CUT_MAX_NODES:
            continue
        got, aborted = pipeline_cuts(cone, k)
        checker = CutChecker(cone)
        node_cuts = set()
        for lines in got:
            if checker.partition(lines).classification is not Direction.UNIDIRECTIONAL:
                bad += 1
            node_cuts.add(tuple(sorted({cone.lines[i][0] for i in lines})))
        expected = {c.nodes for c in brute_unidirectional_node_cuts(cone, k)}
        if aborted or node_cuts != expected:
            bad += 1
    return bad


def test_ac1_oracle_cut_equivalence(corpus):
    assert all(
        len(c.nodes) <= CORPUS_MAX_NODES
        and c.line_count <= CORPUS_MAX_LINES
        and all(len(dag.fanins[v]) <= CORPUS_MAX_FANIN for v in c.nodes)
        for dag, c in corpus
    )
    start = time.perf_counter()
    total = 0
    for (_, cone), k in itertools.product(corpus, KS):
        total += len(pipeline_cuts(cone, k)[0])
    pipeline_seconds = time.perf_counter() - start
    bad = equivalence_failures(corpus, KS)
    report(
        1, bad == 0 and pipeline_seconds < EQUIVALENCE_SECONDS,
        f"{len(corpus)} cones x k={list(KS)}: {total} cuts, {bad} mismatching runs, "
        f"pipeline {pipeline_seconds:.1f}s (limit {EQUIVALENCE_SECONDS:.0f}s)",
    )


def test_ac2_cuts_are_mis(corpus):
    bad = mis_failures(corpus, KS)
    report(2, bad == 0, f"strong cuts == LDG MISs on {len(corpus) * len(KS)} runs, {bad} differ")


def test_ac3_unidirectional(corpus):
    bad = unidirectional_failures(corpus, KS)
    report(3, bad == 0, f"unidirectional partitions and node-cut equality, {bad} violations")


def test_ac4_flow_bounds(corpus):
    checked = violations = 0
    for (_, cone), k in itertools.product(corpus, KS):
        ldg = build_ldg(cone)
        if ldg.vertex_count > BOUND_CHECK_MAX_VERTICES:
            continue
        queries = [(v,) for v in range(ldg.vertex_count)]
        queries += [
            (u, v) for u, v in itertools.combinations(range(ldg.vertex_count), 2)
            if not ldg.adjacent(u, v)
        ]
        for q in queries:
            checked += 1
            bound = min_mis_single(cone, ldg, q[0], k) if len(q) == 1 else min_mis_pair(cone, ldg, *q, k)
            exact = brute_min_mis(ldg, q)
            if exact is None:
                continue
            if bound != ABOVE_BOUND and bound > exact:
                violations += 1
            if bound == ABOVE_BOUND and exact <= k:
                violations += 1
    report(4, violations == 0, f"{checked} single/pair bounds checked, {violations} violations")


def test_ac5_pruning_keeps_mis(corpus):
    checked = violations = 0
    for (_, cone), k in itertools.product(corpus, KS):
        ldg = build_ldg(cone)
        pruned = prune_ldg(cone, ldg, k)
        for mis in brute_mis(ldg, k):
            checked += 1
            members = set(mis.members)
            ok = not members & pruned.deleted
            ok = ok and not any(pruned.adjacent(a, b) for a, b in itertools.combinations(mis.members, 2))
            ok = ok and all(
                v in members or any(pruned.adjacent(v, m) for m in members)
                for v in pruned.surviving
            )
            violations += not ok
    report(5, violations == 0, f"{checked} small MISs survive pruning as MISs, {violations} violations")


def test_ac6_pinned_bound(seven_lines):
    _, cone, ldg = seven_lines
    got = min_mis_single(cone, ldg, LINE_NAMES.index("p"), 2)
    report(6, got == PINNED_BOUND, f"min-MIS bound of line p at k=2 is {got} (expected {PINNED_BOUND})")


@pytest.mark.slow
def test_ac7_performance():
    dag = random_layered_dag(PERF_NODES, PERF_INPUTS, seed=2024, width=20, window=3)
    assert max(len(f) for f in dag.fanins) <= 2
    stats = CircuitStats(len(dag.inputs), dag.node_count, PERF_K, None)
    start = time.perf_counter()
    count = sum(1 for _ in enumerate_circuit(dag, PERF_K, stats=stats))
    wall = time.perf_counter() - start
    ok = wall < PERF_SECONDS and stats.prune_seconds >= stats.enum_seconds
    report(
        7, ok,
        f"{PERF_NODES} nodes, k={PERF_K}: {count} cuts in {wall:.1f}s (limit {PERF_SECONDS:.0f}s), "
        f"prune {stats.prune_seconds:.1f}s >= enum {stats.enum_seconds:.1f}s",
    )


@pytest.mark.slow
def test_ac8_determinism(tmp_path, capsys):
    dag = random_layered_dag(DETERMINISM_NODES, DETERMINISM_INPUTS, seed=432, width=12, window=3)
    circuit = tmp_path / "c432_scale.aag"
    circuit.write_text(write_aiger(dag))
    outputs = []
    for run, jobs in enumerate(("1", "1", "2")):
        path = tmp_path / f"run{run}.jsonl"
        code = main(["enumerate", "--input", str(circuit), "--k", str(DETERMINISM_K),
                     "--jobs", jobs, "--output", str(path)])
        assert code == 0
        outputs.append(path.read_bytes())
    capsys.readouterr()
    identical = outputs[0] == outputs[1] == outputs[2]

    import json

    from strongcuts import parse_aiger

    parsed = parse_aiger(circuit.read_text())
    records = [json.loads(line) for line in outputs[0].decode().splitlines()]
    sample = random.Random(0).sample(records, min(SPOT_CHECK_CUTS, len(records)))
    cones = {}
    invalid = 0
    for rec in sample:
        cone = cones.setdefault(rec["root"], extract_cone(parsed, rec["root"]))
        lines = [cone.lines.index(tuple(p)) for p in rec["lines"]]
        invalid += not is_strong_cut_by_search(cone, lines)
    report(
        8, identical and invalid == 0 and len(records) > 0,
        f"{len(records)} cuts, byte-identical across 2 serial runs and --jobs 2: {identical}; "
        f"{len(sample)} sampled cuts checked by search, {invalid} invalid",
    )


def test_ac9_mutation_control(corpus, monkeypatch):
    cones = corpus[:MUTATION_CONES]
    ks = (MUTATION_K,)
    clean = (equivalence_failures(cones, ks), mis_failures(cones, ks), unidirectional_failures(cones, ks))
    mutation.apply(monkeypatch)
    mutated = (equivalence_failures(cones, ks), mis_failures(cones, ks), unidirectional_failures(cones, ks))
    ok = clean == (0, 0, 0) and all(m > 0 for m in mutated)
    report(
        9, ok,
        f"failing runs clean={list(clean)} mutated={list(mutated)} for suites 1-3",
    )
