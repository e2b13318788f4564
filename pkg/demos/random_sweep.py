"""
How good are the bounds on random graphs?
=========================================

Runs the whole test registry on a handful of random graphs and compares
the best certified bound with the exact chromatic number.
"""

import random

from homtest import Graph, run_suite, test_graph_registry

rng = random.Random(7)
registry = test_graph_registry()
for _ in range(12):
    n = rng.randint(4, 8)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6])
    report = run_suite(g, registry, with_exact=True, cell_cap=60_000)
    winners = [c.test_name for c in report.claims if c.lower_bound == report.best_bound and not c.empty]
    capped = [c.test_name for c in report.cap_limited]
    print(f"n={n} m={g.m}: best {report.best_bound} from {winners}, chi {report.exact_chi}"
          + (f", depth limited: {capped}" if capped else ""))
