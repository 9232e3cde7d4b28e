"""Enumeration of k-feasible strong line cuts (unidirectional cuts)."""

from .cone import Cone, all_roots, extract_cone
from .cuts import (
    LineCut,
    NodeCut,
    Partition,
    is_strong_line_cut,
    line_cut_to_node_cut,
    line_cut_to_partition,
    mis_to_line_cut,
)
from .ldg import Ldg, build_ldg, reachability
from .maxflow import ABOVE_BOUND, INF, build_flow_net, min_cut_value
from .mis_enum import MisSet, enumerate_mis
from .netlist_io import Dag, NetlistError, parse_aiger, parse_edgelist, topological_order
from .pipeline import CircuitStats, CutRecord, enumerate_circuit, root_cuts
from .prune import PrunedLdg, min_mis_pair, min_mis_single, prune_ldg

__version__ = "0.1.0"
