"""Counting fixed subgraph patterns in planar hosts with forbidden cycles.

The package splits into small layers: exact graph plumbing (`graph`,
`graph6`, `canonical`), verdicts and counters (`planarity`, `cycles`,
`counting`), structural parameters (`params`), certified lower-bound
builders (`constructions`), exhaustive search (`search`), and named
verification sweeps (`verify`).  `bruteforce` holds deliberately naive
reference implementations used to cross-check the fast paths.
"""

from .canonical import (CanonicalForm, are_isomorphic, automorphism_count,
                        canonical_form, canonical_labeling)
from .constructions import (CertificationError, Certification,
                            ConstructionError, ConstructionOutput,
                            ConstructionSpec, blowup_independent_set,
                            build_construction, ck_c4free_parallel,
                            conjecture_family, cycle_blowup,
                            even_tree_parallel_paths, pentagon_extremal,
                            tree_beta_blowup)
from .counting import (EmpiricalBound, Pattern, count_copies,
                       count_injective_homs, count_paths_between,
                       count_tripod_vertices, probe_bounded_paths)
from .cycles import (EMPTY_FAMILY, ForbiddenFamily, count_cycles, has_cycle,
                     is_family_free, shortest_even_cycle)
from .graph import (Graph, build_graph, complete_bipartite, complete_graph,
                    connected_components, cycle_graph, disjoint_union,
                    empty_graph, induced_subgraph, is_connected, is_tree,
                    path_with_edges, star_graph)
from .graph6 import from_graph6, to_graph6
from .params import (BetaWitness, TreePartition, beta, degeneracy,
                     independence_number, min_edge_degree_sum, tree_partition)
from .planarity import PlanarityVerdict, is_planar
from .search import (ExtremalRecord, GrowthProbe, SearchBudget,
                     SearchIncomplete, enumerate_constrained, extremal_number,
                     growth_probe)
from .verify import VerificationReport, run_claim

__version__ = "0.1.0"

__all__ = [
    "BetaWitness", "CanonicalForm", "Certification", "CertificationError",
    "ConstructionError", "ConstructionOutput", "ConstructionSpec",
    "EmpiricalBound", "EMPTY_FAMILY", "ExtremalRecord", "ForbiddenFamily",
    "Graph", "GrowthProbe", "Pattern", "PlanarityVerdict", "SearchBudget",
    "SearchIncomplete", "TreePartition", "VerificationReport",
    "are_isomorphic", "automorphism_count", "beta", "blowup_independent_set",
    "build_construction", "build_graph", "canonical_form",
    "canonical_labeling", "ck_c4free_parallel", "complete_bipartite",
    "complete_graph", "conjecture_family", "connected_components",
    "count_copies", "count_cycles", "count_injective_homs",
    "count_paths_between", "count_tripod_vertices", "cycle_blowup",
    "cycle_graph", "degeneracy", "disjoint_union", "empty_graph",
    "enumerate_constrained", "even_tree_parallel_paths", "extremal_number",
    "from_graph6", "growth_probe", "has_cycle", "independence_number",
    "induced_subgraph", "is_connected", "is_family_free", "is_planar", "is_tree",
    "min_edge_degree_sum", "path_with_edges", "pentagon_extremal",
    "probe_bounded_paths", "run_claim", "shortest_even_cycle", "star_graph",
    "to_graph6", "tree_beta_blowup", "tree_partition",
]
