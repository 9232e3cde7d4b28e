"""Walk through the cut pipeline on a seven-line circuit.

Three inputs feed three gates and a root. We build the fanin cone, look at
which lines share a path (the line dependency graph), then list every
strong line cut with at most three lines together with its node form and
the S/T split it induces.
"""

from strongcuts import build_ldg, enumerate_mis, extract_cone, parse_edgelist, prune_ldg
from strongcuts.cuts import CutChecker, line_cut_to_node_cut, mis_to_line_cut

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

dag = parse_edgelist(CIRCUIT)
cone = extract_cone(dag, root=6)
print(f"cone of node 6: {len(cone.nodes)} nodes, {cone.line_count} lines")
for name, (tail, head) in zip(NAMES, cone.lines):
    print(f"  line {name}: {tail} -> {head}")

ldg = build_ldg(cone)
print("\nlines that share an input-to-root path:")
for a, b in ldg.edges():
    print(f"  {NAMES[a]} - {NAMES[b]}")

k = 3
checker = CutChecker(cone)
print(f"\nstrong line cuts with at most {k} lines:")
for mis in enumerate_mis(prune_ldg(cone, ldg, k), k):
    cut = mis_to_line_cut(cone, mis, checker)
    part = checker.partition(cut.lines)
    nodes = line_cut_to_node_cut(cone, cut).nodes
    label = "".join(NAMES[i] for i in cut.lines)
    print(f"  {{{label}}}  node cut {list(nodes)}  T side {sorted(part.t_side)}"
          f"  ({part.classification.value})")
