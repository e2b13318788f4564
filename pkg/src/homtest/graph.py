"""Simple graphs with bitmask adjacency, builders, folds and coloring.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set iff
``u`` and ``v`` are adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when a graph file or graph construction request is malformed."""


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphFormatError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphFormatError(f"vertex {v} adjacent to out-of-range vertex")
            if row >> v & 1:
                raise GraphFormatError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphFormatError("labels length does not match vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"loop edge ({u}, {u})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        labels = [self.label(v) for v in vertices]
        return Graph.from_edges(len(vertices), edges, labels)


# -- parsing and serialization ------------------------------------------------

_VERTEX_DIRECTIVE = "# vertices:"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment line.

    A ``# vertices: N`` comment, as written by :func:`to_edge_list`, pins the
    vertex count so trailing isolated vertices survive a round trip.
    """
    edges = []
    declared = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.lower().startswith(_VERTEX_DIRECTIVE):
                try:
                    declared = int(line[len(_VERTEX_DIRECTIVE):])
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: bad vertex directive {raw!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge {u} {v}")
        edges.append((u, v))
    n = max([declared] + [max(e) + 1 for e in edges])
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{_VERTEX_DIRECTIVE} {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS ``p edge n m`` / ``e u v`` format (1-based ids)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: bad problem line {raw!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e u v', got {raw!r}")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex id out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: loop edge {u} {v}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge n m' header")
    return Graph.from_edges(n, edges)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- constructions ------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise GraphFormatError("complete graph needs m >= 1")
    return Graph.from_edges(m, combinations(range(m), 2))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphFormatError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = [g1.label(v) for v in range(g1.n)] + [g2.label(v) for v in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, edges, labels)


def glue_vertices(g1: Graph, g2: Graph, pairs: Sequence[tuple[int, int]]) -> Graph:
    """Identify vertex ``v`` of ``g1`` with ``w`` of ``g2`` for each pair.

    Vertices of ``g1`` keep their ids; the unglued vertices of ``g2`` follow
    in increasing order.
    """
    left = [v for v, _ in pairs]
    right = [w for _, w in pairs]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise GraphFormatError("glue pairs must use distinct vertices on each side")
    for v, w in pairs:
        if not (0 <= v < g1.n and 0 <= w < g2.n):
            raise GraphFormatError(f"glue pair ({v}, {w}) out of range")
    where = dict(zip(right, left))
    nxt = g1.n
    for w in range(g2.n):
        if w not in where:
            where[w] = nxt
            nxt += 1
    edges = set(g1.edges())
    for u, v in g2.edges():
        a, b = where[u], where[v]
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(nxt, sorted(edges))


def attach_path(g: Graph, a: int, b: int, interior: int) -> Graph:
    """Join ``a`` and ``b`` by a new path with ``interior`` inner vertices.

    New vertices get ids ``g.n .. g.n+interior-1`` in order from ``a`` to ``b``.
    """
    if a == b:
        raise GraphFormatError("path endpoints must differ")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise GraphFormatError("path endpoints out of range")
    if interior < 1:
        raise GraphFormatError("path needs at least one interior vertex")
    chain = [a] + list(range(g.n, g.n + interior)) + [b]
    edges = g.edges() + list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + interior, edges)


def k4_with_path(l: int) -> Graph:
    """K4 on {0, a, b, l+1} with a path 0-1-...-l-(l+1) attached.

    The path is ``0..l+1``; the two remaining K4 vertices are ``l+2`` (a)
    and ``l+3`` (b).
    """
    if l < 1:
        raise GraphFormatError("need l >= 1")
    a, b = l + 2, l + 3
    k4 = [0, l + 1, a, b]
    edges = list(combinations(k4, 2)) + [(i, i + 1) for i in range(l + 1)]
    labels = [str(i) for i in range(l + 2)] + ["a", "b"]
    return Graph.from_edges(l + 4, edges, labels)


# -- folds --------------------------------------------------------------------

def fold_reduce(g: Graph) -> tuple[Graph, list[int]]:
    """Delete folded vertices until none is left.

    ``u`` folds onto ``v != u`` when ``N(u) ⊆ N(v)``.  The smallest such ``u``
    goes first, onto the smallest witness ``v``.  Returns the reduced graph
    (survivors renumbered in increasing order, labels kept) and the map from
    each original vertex to its image in the reduced graph; that map is a
    graph homomorphism ``g -> reduced``.
    """
    alive = (1 << g.n) - 1
    target = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for u in iter_bits(alive):
            nu = g.adj[u] & alive
            for v in iter_bits(alive & ~(1 << u)):
                if nu & ~g.adj[v] == 0:
                    alive &= ~(1 << u)
                    target[u] = v
                    changed = True
                    break
            if changed:
                break
    survivors = list(iter_bits(alive))
    pos = {v: i for i, v in enumerate(survivors)}

    def resolve(v):
        while v not in pos:
            v = target[v]
        return pos[v]

    return g.induced(survivors), [resolve(v) for v in range(g.n)]


# -- coloring -----------------------------------------------------------------

def chromatic_number_exact(g: Graph, limit: int = 20) -> int:
    """Exact chromatic number by DSATUR-ordered branch and bound."""
    if g.n > limit:
        raise ValueError(f"graph has {g.n} vertices, exact oracle limit is {limit}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    best = greedy_upper_bound(g)
    adj = g.adj
    color = [-1] * g.n
    classes: list[int] = []

    def pick() -> int:
        chosen, key = -1, None
        for v in range(g.n):
            if color[v] >= 0:
                continue
            sat = sum(1 for c in classes if c & adj[v])
            k = (sat, popcount(adj[v]))
            if key is None or k > key:
                chosen, key = v, k
        return chosen

    def search(colored: int) -> None:
        nonlocal best
        if colored == g.n:
            best = min(best, len(classes))
            return
        v = pick()
        for c in range(len(classes)):
            if not classes[c] & adj[v]:
                classes[c] |= 1 << v
                color[v] = c
                search(colored + 1)
                classes[c] &= ~(1 << v)
                color[v] = -1
        if len(classes) + 1 < best:
            classes.append(1 << v)
            color[v] = len(classes) - 1
            search(colored + 1)
            classes.pop()
            color[v] = -1

    search(0)
    return best


def greedy_upper_bound(g: Graph) -> int:
    """Number of colors used by first-fit in descending-degree order."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = {}
    for v in order:
        used = {color[u] for u in iter_bits(g.adj[v]) if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color.values(), default=-1) + 1


# -- test graphs --------------------------------------------------------------

@dataclass(frozen=True)
class TestGraph:
    """A graph with an edge-flipping involution and its chromatic number."""

    __test__ = False  # keep pytest from collecting this class

    graph: Graph
    involution: tuple[int, ...]
    flipped_edge: tuple[int, int]
    chi: int
    name: str
    unverified: bool = False

    def check(self) -> None:
        """Raise ``ValueError`` unless the structural invariants hold."""
        g, inv = self.graph, self.involution
        if sorted(inv) != list(range(g.n)):
            raise ValueError(f"{self.name}: involution is not a permutation")
        if any(inv[inv[x]] != x for x in range(g.n)):
            raise ValueError(f"{self.name}: involution does not square to the identity")
        for u, v in g.edges():
            if not g.has_edge(inv[u], inv[v]):
                raise ValueError(f"{self.name}: involution is not an automorphism")
        u, v = self.flipped_edge
        if not g.has_edge(u, v) or inv[u] != v or inv[v] != u:
            raise ValueError(f"{self.name}: declared edge ({u}, {v}) is not flipped")


def complete_test_graph(m: int) -> TestGraph:
    if m < 2:
        raise GraphFormatError("complete test graph needs m >= 2")
    inv = (1, 0) + tuple(range(2, m))
    return TestGraph(complete_graph(m), inv, (0, 1), m, f"k{m}")


def odd_cycle_test_graph(k: int) -> TestGraph:
    if k < 3 or k % 2 == 0:
        raise GraphFormatError("odd cycle test graph needs odd k >= 3")
    inv = tuple(k - 1 - x for x in range(k))
    return TestGraph(cycle_graph(k), inv, (0, k - 1), 3, f"c{k}")


def custom_test_graph(graph: Graph, involution: Sequence[int], flipped_edge: tuple[int, int],
                      name: str, chi: int | None = None) -> TestGraph:
    """User-supplied test graph, flagged ``unverified``.

    The coloring bound is only sound for Stiefel-Whitney test graphs; nothing
    here can certify that property.
    """
    if chi is None:
        chi = chromatic_number_exact(graph)
    t = TestGraph(graph, tuple(involution), tuple(flipped_edge), chi, name, unverified=True)
    t.check()
    return t


def test_graph_registry() -> list[TestGraph]:
    return [complete_test_graph(m) for m in (2, 3, 4, 5)] + [odd_cycle_test_graph(k) for k in (5, 7, 9)]


test_graph_registry.__test__ = False


def get_test_graph(name: str) -> TestGraph:
    key = name.strip().lower()
    for t in test_graph_registry():
        if t.name == key:
            return t
    if len(key) > 1 and key[1:].isdigit():
        if key[0] == "k":
            return complete_test_graph(int(key[1:]))
        if key[0] == "c":
            return odd_cycle_test_graph(int(key[1:]))
    known = ", ".join(t.name for t in test_graph_registry())
    raise KeyError(f"unknown test graph {name!r}; registry: {known}")
