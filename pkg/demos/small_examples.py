"""
Two small worked graphs
=======================

A disjoint K2 + K3, and a K4 with a long path between two of its
vertices.  For each we build Hom(T, G) for a few test graphs, read off the
mod-2 Betti numbers and turn them into a chromatic lower bound.
"""

from homtest import build_hom, boundary_complex, betti, homology_test, get_test_graph, chromatic_number_exact
from homtest.graph import complete_graph, disjoint_union, k4_with_path

tests = [get_test_graph(name) for name in ("k2", "k3", "c5")]

# K2 + K3: every complex here is disconnected, so nothing beyond chi(T) is certified
g = disjoint_union(complete_graph(2), complete_graph(3))
for t in tests:
    h = build_hom(t, g)
    claim = homology_test(t, g)
    print(f"Hom({t.name}, K2+K3): f-vector {h.f_vector}, reduced betti {betti(boundary_complex(h)).values}, "
          f"bound {claim.lower_bound}")
print("chromatic number", chromatic_number_exact(g))

# The path graph.  Hom(K2, G) is connected with two loops, which gives 3;
# Hom(K3, G) only sees the K4 and gives 4.
for l in (4, 5):
    g = k4_with_path(l)
    for t in tests[:2]:
        claim = homology_test(t, g)
        print(f"l={l} {t.name}: d={claim.d} bound={claim.lower_bound} betti={claim.evidence.values}")
    print(f"l={l} chromatic number", chromatic_number_exact(g))
