"""Diverse solutions via copy-weighted packings.

Finds ``k`` shortest s-t paths, matroid bases, or size-``p`` bipartite
matchings maximizing the weighted sum of pairwise Hamming distances.
"""

__version__ = "0.1.0"

from ._backend import DEFAULT as KERNEL_BACKEND
from .baseline import brute_force_diverse_paths, yen_k_shortest
from .dag import build_shortest_path_dag, dijkstra, orient_undirected
from .diversity import (
    SolutionSet,
    copy_weight,
    diversity_multiplicity,
    diversity_pairwise,
)
from .errors import InfeasibleError, NegativeWeightError, ParseError, WeightBoundError
from .flow import FlowNetwork, IntegralFlow, decompose_unit_flow_paths, min_cost_flow
from .graph import (
    DirectedGraph,
    GridSpec,
    UndirectedGraph,
    generate_grid,
    parse_dimacs_gr,
    parse_snap_edgelist,
)
from .matching import (
    BipartiteGraph,
    bipartite_edge_color,
    build_matching_network,
    diverse_bipartite_matchings,
    rebalance_matchings,
)
from .matroid import (
    graphic_matroid,
    matroid_partition_augment,
    uniform_matroid,
    weighted_diverse_bases,
)
from .paths import diverse_shortest_paths, expand_dag

__all__ = [
    "KERNEL_BACKEND",
    "BipartiteGraph",
    "DirectedGraph",
    "FlowNetwork",
    "GridSpec",
    "InfeasibleError",
    "IntegralFlow",
    "NegativeWeightError",
    "ParseError",
    "SolutionSet",
    "UndirectedGraph",
    "WeightBoundError",
    "bipartite_edge_color",
    "brute_force_diverse_paths",
    "build_matching_network",
    "build_shortest_path_dag",
    "copy_weight",
    "decompose_unit_flow_paths",
    "dijkstra",
    "diverse_bipartite_matchings",
    "diverse_shortest_paths",
    "diversity_multiplicity",
    "diversity_pairwise",
    "expand_dag",
    "generate_grid",
    "graphic_matroid",
    "matroid_partition_augment",
    "min_cost_flow",
    "orient_undirected",
    "parse_dimacs_gr",
    "parse_snap_edgelist",
    "rebalance_matchings",
    "uniform_matroid",
    "weighted_diverse_bases",
    "yen_k_shortest",
]
