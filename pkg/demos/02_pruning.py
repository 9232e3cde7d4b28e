"""How flow-based pruning shrinks the search before enumeration.

For each line we compute a lower bound on the size of the smallest
maximal independent set containing it. Lines whose bound exceeds k can
never appear in a k-feasible cut and are deleted. The same idea applied to
pairs adds edges that forbid two lines from appearing together.
"""

from strongcuts import build_ldg, extract_cone, min_mis_single, parse_edgelist, prune_ldg
from strongcuts.oracle import brute_min_mis, random_layered_dag

CIRCUIT = """
inputs: 0 1 2
0 3
1 4
3 5
2 5
5 6
4 6
4 5
"""
NAMES = "pqtuvwx"

cone = extract_cone(parse_edgelist(CIRCUIT), 6)
ldg = build_ldg(cone)
k = 2
print(f"bounds at k={k} (values above k+1 print as inf):")
for v, name in enumerate(NAMES):
    bound = min_mis_single(cone, ldg, v, k)
    exact = brute_min_mis(ldg, [v])
    verdict = "delete" if bound > k else "keep"
    print(f"  {name}: flow bound {bound}, exhaustive {exact} -> {verdict}")

pruned = prune_ldg(cone, ldg, k)
print("surviving lines:", [NAMES[v] for v in pruned.surviving])

print("\nOn a larger random circuit:")
dag = random_layered_dag(150, 12, seed=8, width=10)
cone = extract_cone(dag, dag.node_count - 1)
ldg = build_ldg(cone)
for k in (2, 4, 6):
    stats = prune_ldg(cone, ldg, k).stats
    print(f"  k={k}: {stats.vertices_before} lines, {stats.vertices_deleted} deleted, "
          f"{stats.edges_added} edges added, {stats.flow_queries} flow queries, "
          f"{stats.seconds:.2f}s")
