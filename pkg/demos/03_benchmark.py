"""Enumerate cuts for every gate of a generated circuit and tabulate the
time split between pruning and enumeration as k grows, with and without a
cone size limit."""

import time

from strongcuts import CircuitStats, enumerate_circuit
from strongcuts.oracle import random_layered_dag

dag = random_layered_dag(200, 24, seed=11, width=12)
print(f"circuit: {dag.node_count} nodes, {len(dag.inputs)} inputs, {dag.edge_count} lines\n")
print(f"{'k':>3} {'limit':>6} {'cuts':>8} {'prune s':>8} {'enum s':>8} {'wall s':>8}")
for limit in (None, 30):
    for k in (2, 4, 6):
        stats = CircuitStats(len(dag.inputs), dag.node_count, k, limit)
        start = time.perf_counter()
        for _ in enumerate_circuit(dag, k, cone_limit=limit, stats=stats):
            pass
        wall = time.perf_counter() - start
        print(f"{k:>3} {str(limit):>6} {stats.total_cuts:>8} {stats.prune_seconds:>8.2f} "
              f"{stats.enum_seconds:>8.2f} {wall:>8.2f}")
