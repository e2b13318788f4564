"""Construction of the prodsimplicial complex Hom(T, G).

A cell is a tuple ``eta`` with one nonempty vertex bitmask of ``G`` per
vertex of ``T``; it belongs to Hom(T, G) iff for every edge ``(x, y)`` of
``T`` every vertex of ``eta[x]`` is adjacent to every vertex of ``eta[y]``.
Its dimension is ``sum(|eta[x]| - 1)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, TestGraph, iter_bits, popcount
from .z2algebra import ChainComplexZ2, Involution, is_free_involution, quotient

Cell = tuple[int, ...]

DEFAULT_CELL_CAP = 5_000_000


class ResourceCapExceeded(RuntimeError):
    pass


class ComplexIntegrityError(RuntimeError):
    """A face or image cell is missing; only possible through a bug."""


def cell_dim(cell: Cell) -> int:
    return sum(popcount(m) for m in cell) - len(cell)


def is_valid_cell(t: Graph, g: Graph, cell: Cell) -> bool:
    if len(cell) != t.n or any(m == 0 for m in cell):
        return False
    for x, y in t.edges():
        for u in iter_bits(cell[x]):
            if cell[y] & ~g.adj[u]:
                return False
    return True


def _graph_of(t) -> Graph:
    return t.graph if isinstance(t, TestGraph) else t


def search_order(t) -> list[int]:
    """Breadth-first order of ``T`` starting at the flipped edge."""
    tg = _graph_of(t)
    start = list(t.flipped_edge) if isinstance(t, TestGraph) else []
    order: list[int] = []
    seen = set()
    queue = deque()
    for root in start + list(range(tg.n)):
        if root in seen:
            continue
        seen.add(root)
        queue.append(root)
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in iter_bits(tg.adj[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


class _CommonNeighbours(dict):
    """Lazy cache: vertex set -> vertices adjacent to all of it."""

    def __init__(self, g: Graph):
        super().__init__()
        self.g = g

    def __missing__(self, mask):
        acc = (1 << self.g.n) - 1
        for u in iter_bits(mask):
            acc &= self.g.adj[u]
        self[mask] = acc
        return acc


def _subsets(mask: int, max_size: int):
    bits = [1 << b for b in iter_bits(mask)]
    for k in range(1, min(max_size, len(bits)) + 1):
        for combo in combinations(bits, k):
            yield sum(combo), k - 1


class _Stop(Exception):
    pass


def enumerate_cells(t, g: Graph, max_dim: int | None = None, cell_cap: int = DEFAULT_CELL_CAP,
                    stop_after: int | None = None) -> list[Cell]:
    """All cells of Hom(T, G) of dimension at most ``max_dim``, unsorted.

    Backtracks over ``T`` in :func:`search_order`; after fixing ``eta[x]``, each
    unassigned neighbour of ``x`` is restricted to the common neighbourhood of
    ``eta[x]`` and the branch is cut as soon as some restriction is empty.
    ``stop_after`` ends the search once that many cells were found.
    """
    tg = _graph_of(t)
    order = search_order(t)
    nbrs = [list(iter_bits(tg.adj[x])) for x in range(tg.n)]
    cn = _CommonNeighbours(g)
    full = (1 << g.n) - 1
    non_isolated = 0
    for u in range(g.n):
        if g.adj[u]:
            non_isolated |= 1 << u
    allowed0 = [non_isolated if tg.adj[x] else full for x in range(tg.n)]
    out: list[Cell] = []
    if tg.n == 0 or any(a == 0 for a in allowed0):
        return out
    budget0 = g.n * tg.n if max_dim is None else max_dim
    cell = [0] * tg.n
    last = len(order) - 1
    assigned_later = []
    for pos, x in enumerate(order):
        assigned_later.append([z for z in nbrs[x] if order.index(z) > pos])

    def rec(pos, allowed, budget):
        x = order[pos]
        later = assigned_later[pos]
        for subset, extra in _subsets(allowed[x], budget + 1):
            nxt = allowed
            if later:
                common = cn[subset]
                nxt = list(allowed)
                dead = False
                for z in later:
                    nxt[z] &= common
                    if not nxt[z]:
                        dead = True
                        break
                if dead:
                    continue
            cell[x] = subset
            if pos == last:
                out.append(tuple(cell))
                if len(out) > cell_cap:
                    raise ResourceCapExceeded(f"Hom complex exceeds the cap of {cell_cap} cells")
                if stop_after is not None and len(out) >= stop_after:
                    raise _Stop
            else:
                rec(pos + 1, nxt, budget - extra)
        cell[x] = 0

    try:
        rec(0, allowed0, budget0)
    except _Stop:
        pass
    return out


def count_vertices_if_cycle(t, g: Graph) -> int | None:
    """Number of homomorphisms C_k -> G (closed walks of length k), or None if T is not a cycle."""
    tg = _graph_of(t)
    if tg.n < 3 or any(popcount(r) != 2 for r in tg.adj) or len(_reachable_from_zero(tg)) != tg.n:
        return None
    a = [[g.adj[u] >> v & 1 for v in range(g.n)] for u in range(g.n)]
    power = a
    for _ in range(tg.n - 1):
        power = [[sum(row[k] * a[k][j] for k in range(g.n)) for j in range(g.n)] for row in power]
    return sum(power[i][i] for i in range(g.n))


def _reachable_from_zero(tg: Graph) -> set[int]:
    seen = {0}
    stack = [0]
    while stack:
        for y in iter_bits(tg.adj[stack.pop()]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


@dataclass
class HomComplex:
    """Cells of Hom(T, G) graded by dimension and sorted within each level.

    ``max_dim_built`` is ``None`` for a full build.  ``truncated`` is true when
    cells above ``max_dim_built`` exist.
    """

    t: TestGraph
    g: Graph
    cells: list[list[Cell]]
    max_dim_built: int | None = None
    truncated: bool = False
    index: list[dict[Cell, int]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = [{c: k for k, c in enumerate(level)} for level in self.cells]

    @property
    def f_vector(self) -> list[int]:
        return [len(level) for level in self.cells]

    @property
    def top(self) -> int:
        return len(self.cells) - 1

    def is_empty(self) -> bool:
        return not self.cells

    def __len__(self) -> int:
        return sum(self.f_vector)

    def all_cells(self):
        for level in self.cells:
            yield from level

    def cell_id(self, cell: Cell) -> tuple[int, int]:
        d = cell_dim(cell)
        return d, self.index[d][cell]


def _has_coface(t: Graph, g: Graph, cell: Cell, cn) -> bool:
    for x in range(t.n):
        room = ~cell[x] & ((1 << g.n) - 1)
        for y in iter_bits(t.adj[x]):
            room &= cn[cell[y]]
            if not room:
                break
        if room:
            return True
    return False


def build_hom(t: TestGraph, g: Graph, max_dim: int | str | None = "all",
              cell_cap: int = DEFAULT_CELL_CAP) -> HomComplex:
    """Build Hom(T, G) up to ``max_dim`` (``"all"`` or ``None`` for everything)."""
    limit = None if max_dim in ("all", None) else int(max_dim)
    if limit is not None and limit < 0:
        raise ValueError("max_dim must be >= 0")
    walks = count_vertices_if_cycle(t, g)
    if walks is not None and walks > cell_cap:
        raise ResourceCapExceeded(f"Hom complex has {walks} vertices, over the cap of {cell_cap} cells")
    levels: list[list[Cell]] = []
    for cell in enumerate_cells(t, g, limit, cell_cap):
        d = cell_dim(cell)
        while len(levels) <= d:
            levels.append([])
        levels[d].append(cell)
    for level in levels:
        level.sort()
    truncated = False
    if limit is not None and len(levels) == limit + 1:
        cn = _CommonNeighbours(g)
        truncated = any(_has_coface(t.graph, g, c, cn) for c in levels[limit])
    return HomComplex(t, g, levels, limit, truncated)


def hom_is_nonempty(t: TestGraph, g: Graph) -> bool:
    return bool(enumerate_cells(t, g, 0, stop_after=1))


def faces(cell: Cell):
    """Codimension-one faces: drop one vertex from one coordinate."""
    for x, mask in enumerate(cell):
        if mask & (mask - 1):
            for v in iter_bits(mask):
                yield cell[:x] + (mask ^ (1 << v),) + cell[x + 1:]


def _packed_keys(h: HomComplex, d: int) -> list[int]:
    """Cells of dimension ``d`` packed into single ints, ``g.n`` bits per coordinate."""
    n = h.g.n
    keys = []
    for cell in h.cells[d]:
        k = 0
        for x, m in enumerate(cell):
            k |= m << (x * n)
        keys.append(k)
    return keys


def boundary_matrix(h: HomComplex, d: int) -> list[int]:
    """Columns of ``D_d``: the faces of each ``d``-cell as a bitmask over ``(d-1)``-cells."""
    if d < 0 or d > h.top:
        return []
    if d == 0:
        return [0] * len(h.cells[0])
    n = h.g.n
    block = (1 << n) - 1
    lower = {k: i for i, k in enumerate(_packed_keys(h, d - 1))}
    offsets = [x * n for x in range(h.t.graph.n)]
    cols = []
    for cell, key in zip(h.cells[d], _packed_keys(h, d)):
        col = 0
        for off in offsets:
            m = key >> off & block
            if m & (m - 1):
                while m:
                    low = m & -m
                    i = lower.get(key ^ (low << off))
                    if i is None:
                        raise ComplexIntegrityError(f"a face of {cell} is missing from the complex")
                    col ^= 1 << i
                    m ^= low
        cols.append(col)
    return cols


def boundary_complex(h: HomComplex) -> ChainComplexZ2:
    sizes = h.f_vector
    boundaries = [boundary_matrix(h, d) for d in range(len(sizes))]
    return ChainComplexZ2(sizes, boundaries, h.max_dim_built if h.truncated else None)


def induced_involution(h: HomComplex) -> Involution:
    """Per-dimension permutation ``eta -> eta o gamma`` of cell indices."""
    gamma = h.t.involution
    perms = []
    for d, level in enumerate(h.cells):
        idx = h.index[d]
        perm = []
        for cell in level:
            image = tuple(cell[gamma[x]] for x in range(len(cell)))
            k = idx.get(image)
            if k is None:
                raise ComplexIntegrityError(f"image {image} of {cell} missing from the complex")
            perm.append(k)
        perms.append(tuple(perm))
    return perms


def is_free(h: HomComplex, inv: Involution | None = None) -> bool:
    return is_free_involution(induced_involution(h) if inv is None else inv)


def quotient_complex(h: HomComplex, inv: Involution | None = None) -> ChainComplexZ2:
    if inv is None:
        inv = induced_involution(h)
    return quotient(boundary_complex(h), inv)


def export_cells(h: HomComplex) -> str:
    """Text dump: ``dim; mask_0,mask_1,...`` per cell, masks in hex."""
    lines = []
    for d, level in enumerate(h.cells):
        for cell in level:
            lines.append(f"{d}; " + ",".join(format(m, "x") for m in cell))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_cells(text: str) -> list[Cell]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        d, masks = line.split(";")
        cell = tuple(int(m, 16) for m in masks.strip().split(","))
        if cell_dim(cell) != int(d):
            raise ValueError(f"dimension mismatch in line {line!r}")
        out.append(cell)
    return out
