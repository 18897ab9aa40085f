"""Symmetry-preserving reduction of vertex-colored graphs."""

from .dimacs import DimacsError, parse_dimacs, write_dimacs, write_generators
from .graph import (ColoredGraph, GraphError, VertexRenaming, apply_permutation, build_graph,
                    induced_subgraph, is_automorphism)
from .lifting import LiftError, RepresentationMap, flatten_chain, lift
from .perm import SparseAutomorphism, compose
from .probing import (OrbitPartition, bounded_probe_ir, probe_1ir_all_classes, probe_inf_size2,
                      probe_inf_sizeB, singleton_correspondence)
from .quotient import (QuotientGraph, build_quotient, flip_edges, quotient_components, quotient_equal,
                       remove_singletons)
from .reductions import (reduce_obfuscated_edge_flip, reduce_obfuscated_matchings,
                         reduce_unique_endpoint_paths, remove_degree0, remove_degree1, remove_universal)
from .refinement import Coloring, individualize, is_equitable, refine
from .scheduler import PreprocessReport, ScheduleConfig, preprocess, reconstruct_group
from .solver import brute_force_aut, group_closure, ir_solve

__all__ = [
    "Coloring", "ColoredGraph", "DimacsError", "GraphError", "LiftError", "OrbitPartition",
    "PreprocessReport", "QuotientGraph", "RepresentationMap", "ScheduleConfig", "SparseAutomorphism",
    "VertexRenaming", "apply_permutation", "bounded_probe_ir", "brute_force_aut", "build_graph",
    "build_quotient", "compose", "flatten_chain", "flip_edges", "group_closure", "individualize",
    "induced_subgraph", "ir_solve", "is_automorphism", "is_equitable", "lift", "parse_dimacs",
    "preprocess", "probe_1ir_all_classes", "probe_inf_size2", "probe_inf_sizeB", "quotient_components",
    "quotient_equal", "reconstruct_group", "reduce_obfuscated_edge_flip", "reduce_obfuscated_matchings",
    "reduce_unique_endpoint_paths", "refine", "remove_degree0", "remove_degree1", "remove_singletons",
    "remove_universal", "singleton_correspondence", "write_dimacs", "write_generators",
]
