"""
Gluing a 5-cycle onto K4
========================

K4 and C5 share one vertex.  The K3 test only sees the K4 part, so it
certifies 4, while the K2 test gets stuck at 3: its complex picks up the
circle coming from the cycle.
"""

from homtest import run_suite, get_test_graph, build_hom, boundary_complex, betti
from homtest.graph import complete_graph, cycle_graph, glue_vertices

g = glue_vertices(complete_graph(4), cycle_graph(5), [(0, 0)])
report = run_suite(g, [get_test_graph(n) for n in ("k2", "k3", "c5")], with_exact=True)
for c in report.claims:
    print(f"{c.test_name}: d={c.d} bound={c.lower_bound}")
print("best", report.best_bound, "exact", report.exact_chi)

k2 = build_hom(get_test_graph("k2"), g)
print("Hom(K2, G) f-vector", k2.f_vector, "reduced betti", betti(boundary_complex(k2)).values)

same = set(build_hom(get_test_graph("k3"), g).all_cells()) == set(build_hom(get_test_graph("k3"), complete_graph(4)).all_cells())
print("Hom(K3, G) equals Hom(K3, K4):", same)
