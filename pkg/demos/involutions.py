"""
The swap on Hom(T, G)
=====================

Flipping the chosen edge of T acts on Hom(T, G) without fixed points.
Here we check that on Hom(C5, K4), compare Euler characteristics with the
orbit complex, and look at the two small hand-built spaces.
"""

from homtest import build_hom, boundary_complex, betti, euler_characteristic, get_test_graph
from homtest.graph import complete_graph
from homtest.homcomplex import induced_involution, quotient_complex
from homtest.z2algebra import commutes_with_boundary, fixture_complexes, is_free_involution

h = build_hom(get_test_graph("c5"), complete_graph(4))
c = boundary_complex(h)
inv = induced_involution(h)
q = quotient_complex(h, inv)
print("free:", is_free_involution(inv), " chain map:", commutes_with_boundary(c, inv))
print("cells", h.f_vector, "orbits", q.sizes)
print("euler", euler_characteristic(c), "quotient euler", euler_characteristic(q))
print("betti of the complex", betti(c, reduced=False).values, "of the quotient", betti(q, reduced=False).values)

# two points plus a circle, and a sphere with a small sphere on each pole
for name, fx in fixture_complexes().items():
    print(name, "reduced betti", betti(fx.complex).values, "free:", is_free_involution(fx.involution))
