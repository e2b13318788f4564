"""Chromatic lower bounds from the mod-2 homology of Hom complexes."""

from .bound import BoundClaim, BoundReport, fold_equivalence_check, homology_test, run_suite, trivial_bound
from .graph import (Graph, GraphFormatError, TestGraph, chromatic_number_exact, complete_graph, cycle_graph,
                    fold_reduce, get_test_graph, parse_dimacs, parse_edge_list, test_graph_registry)
from .homcomplex import HomComplex, ResourceCapExceeded, boundary_complex, build_hom
from .z2algebra import ChainComplexZ2, betti, euler_characteristic, gf2_rank

__all__ = [
    "BoundClaim", "BoundReport", "ChainComplexZ2", "Graph", "GraphFormatError", "HomComplex",
    "ResourceCapExceeded", "TestGraph", "betti", "boundary_complex", "build_hom", "chromatic_number_exact",
    "complete_graph", "cycle_graph", "euler_characteristic", "fold_equivalence_check", "fold_reduce",
    "get_test_graph", "gf2_rank", "homology_test", "parse_dimacs", "parse_edge_list", "run_suite",
    "test_graph_registry", "trivial_bound",
]
