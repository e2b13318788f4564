"""Slow reference implementations used to cross-check the fast paths.

Nothing in the library proper imports this module.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .graph import Graph, TestGraph


def brute_force_cells(t: TestGraph | Graph, g: Graph) -> list[tuple[int, ...]]:
    """All assignments V(T) -> nonempty subsets of V(G) with complete bipartite edge images."""
    tg = t.graph if isinstance(t, TestGraph) else t
    if tg.n * g.n > 12:
        raise ValueError("brute force limited to |V(T)|*|V(G)| <= 12")
    t_edges = tg.edges()
    out = []
    for cell in product(range(1, 1 << g.n), repeat=tg.n):
        ok = True
        for x, y in t_edges:
            for u in range(g.n):
                if cell[x] >> u & 1:
                    for w in range(g.n):
                        if cell[y] >> w & 1 and not g.has_edge(u, w):
                            ok = False
        if ok:
            out.append(cell)
    return out


def naive_rank(m) -> int:
    """Row reduction on an unpacked 0/1 array."""
    a = np.array(m, dtype=np.uint8) % 2
    if a.size == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i, c]), None)
        if pivot is None:
            continue
        a[[r, pivot]] = a[[pivot, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def naive_betti(sizes, dense_boundaries, reduced=True) -> list[int]:
    """Betti numbers from dense boundary matrices; ``dense_boundaries[i]`` is D_i."""
    ranks = [0] + [naive_rank(d) if d.size else 0 for d in dense_boundaries[1:]] + [0]
    out = [sizes[i] - ranks[i] - ranks[i + 1] for i in range(len(sizes))]
    if reduced and out:
        out[0] -= 1
    return out


def chromatic_by_enumeration(g: Graph) -> int:
    """Smallest k admitting a proper k-coloring, by trying all assignments."""
    if g.n > 10:
        raise ValueError("enumeration oracle limited to 10 vertices")
    if g.n == 0:
        return 0
    edges = g.edges()
    k = 1
    while True:
        # vertex 0 gets color 0 without loss of generality
        for rest in product(range(k), repeat=g.n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in edges):
                return k
        k += 1
