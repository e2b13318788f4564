"""Linear algebra over the two-element field and mod-2 chain complexes.

Matrices are stored column-wise: column ``j`` is a Python int whose bit ``i``
is the entry in row ``i``.  XOR of two columns is then a single word-parallel
operation on the packed representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import iter_bits


class ChainComplexError(ValueError):
    pass


# -- matrices -----------------------------------------------------------------

def pack_columns(dense) -> list[int]:
    """Dense 0/1 array (rows x cols) -> list of column bitmasks."""
    a = np.asarray(dense, dtype=np.uint8) & 1
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    weights = [1 << i for i in range(a.shape[0])]
    return [sum(w for w, bit in zip(weights, a[:, j]) if bit) for j in range(a.shape[1])]


def unpack_columns(columns: Sequence[int], nrows: int) -> np.ndarray:
    out = np.zeros((nrows, len(columns)), dtype=np.uint8)
    for j, col in enumerate(columns):
        for i in iter_bits(col):
            out[i, j] = 1
    return out


def dump_matrix(columns: Sequence[int], nrows: int) -> str:
    """One line per row of '0'/'1' characters."""
    return "\n".join("".join("1" if c >> i & 1 else "0" for c in columns) for i in range(nrows))


def gf2_rank(m, nrows: int | None = None) -> int:
    """Rank over the two-element field.

    ``m`` is either a list of column bitmasks or a dense 0/1 array.  Columns
    are reduced against a table of pivots keyed by their highest set bit; the
    input is never modified.
    """
    columns = pack_columns(m) if isinstance(m, np.ndarray) else m
    pivots: dict[int, int] = {}
    for col in columns:
        while col:
            top = col.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = col
                break
            col ^= p
    return len(pivots)


def apply_columns(columns: Sequence[int], vector: int) -> int:
    """Matrix-vector product: XOR of the columns selected by ``vector``."""
    acc = 0
    for j in iter_bits(vector):
        acc ^= columns[j]
    return acc


# -- chain complexes ----------------------------------------------------------

@dataclass
class ChainComplexZ2:
    """Mod-2 chain complex.

    ``sizes[i]`` is the number of ``i``-dimensional generators and
    ``boundaries[i]`` (for ``i >= 1``) the columns of ``D_i : C_i -> C_{i-1}``.
    ``boundaries[0]`` is the empty zero map and is kept so that indices line up.
    ``truncated_above = M`` means generators above dimension ``M`` exist but
    were not built.
    """

    sizes: list[int]
    boundaries: list[list[int]]
    truncated_above: int | None = None
    names: list[list[str]] | None = field(default=None, repr=False)

    @property
    def top(self) -> int:
        return len(self.sizes) - 1

    def boundary(self, i: int) -> list[int]:
        if 1 <= i <= self.top:
            return self.boundaries[i]
        if 0 <= i <= self.top:
            return [0] * self.sizes[i]
        return []

    def is_empty(self) -> bool:
        return not any(self.sizes)


def validate(c: ChainComplexZ2) -> tuple[bool, tuple[int, int] | None]:
    """Check shapes and ``D_i D_{i+1} = 0``.

    Returns ``(ok, witness)`` where the witness is ``(i, j)``: column ``j`` of
    ``D_i`` is where the first failure was found.
    """
    if len(c.boundaries) != len(c.sizes):
        return False, (len(c.boundaries), -1)
    for i in range(1, c.top + 1):
        cols = c.boundaries[i]
        if len(cols) != c.sizes[i]:
            return False, (i, -1)
        limit = 1 << c.sizes[i - 1]
        for j, col in enumerate(cols):
            if col >= limit or col < 0:
                return False, (i, j)
    for i in range(2, c.top + 1):
        lower = c.boundaries[i - 1]
        for j, col in enumerate(c.boundaries[i]):
            if apply_columns(lower, col):
                return False, (i, j)
    return True, None


@dataclass(frozen=True)
class BettiVector:
    """Mod-2 Betti numbers ``values[0..complete_through]``.

    An empty complex has ``empty=True`` and no values in the reduced case.
    """

    reduced: bool
    values: tuple[int, ...]
    complete_through: int
    empty: bool = False
    truncated: bool = False

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        if i > self.complete_through:
            if not self.truncated:
                return 0
            raise ChainComplexError(f"Betti number in dimension {i} is not certified by a truncated build")
        return self.values[i]

    def first_nonzero(self) -> int | None:
        for i, b in enumerate(self.values):
            if b:
                return i
        return None


def boundary_ranks(c: ChainComplexZ2) -> list[int]:
    """``ranks[i] = rank D_i`` for ``i = 0..top+1`` (ends are zero maps)."""
    return [0] + [gf2_rank(c.boundaries[i]) for i in range(1, c.top + 1)] + [0]


def betti(c: ChainComplexZ2, reduced: bool = True) -> BettiVector:
    if c.is_empty():
        if reduced:
            return BettiVector(True, (), -1, empty=True, truncated=c.truncated_above is not None)
        return BettiVector(False, (0,), 0, empty=True)
    ranks = boundary_ranks(c)
    values = []
    for i in range(c.top + 1):
        b = c.sizes[i] - ranks[i] - ranks[i + 1]
        if b < 0:
            raise ChainComplexError(f"negative Betti number in dimension {i}; rank computation is broken")
        values.append(b)
    through = c.top
    if c.truncated_above is not None:
        through = c.truncated_above - 1
        values = values[: through + 1]
    if reduced and values:
        values[0] -= 1
    return BettiVector(reduced, tuple(values), through, truncated=c.truncated_above is not None)


def euler_characteristic(c: ChainComplexZ2) -> int:
    if c.truncated_above is not None:
        raise ChainComplexError("Euler characteristic of a truncated complex is undefined")
    return sum((-1) ** i * n for i, n in enumerate(c.sizes))


# -- involutions --------------------------------------------------------------

Involution = list[tuple[int, ...]]  # per-dimension permutation of generator indices


def is_free_involution(inv: Involution) -> bool:
    return all(p[j] != j for p in inv for j in range(len(p)))


def permute_mask(perm: Sequence[int], mask: int) -> int:
    out = 0
    for j in iter_bits(mask):
        out |= 1 << perm[j]
    return out


def commutes_with_boundary(c: ChainComplexZ2, inv: Involution) -> bool:
    """``P_{i-1} D_i == D_i P_i`` in every dimension."""
    for i in range(1, c.top + 1):
        cols = c.boundaries[i]
        for j, col in enumerate(cols):
            if permute_mask(inv[i - 1], col) != cols[inv[i][j]]:
                return False
    return True


def invariant_cochain_dim(perm: Sequence[int]) -> int:
    """Dimension of the cochains fixed by the permutation: ``n - rank(P + I)``."""
    cols = [(1 << j) ^ (1 << perm[j]) for j in range(len(perm))]
    return len(perm) - gf2_rank(cols)


def orbit_representatives(perm: Sequence[int]) -> list[int]:
    return [j for j in range(len(perm)) if j <= perm[j]]


def quotient(c: ChainComplexZ2, inv: Involution) -> ChainComplexZ2:
    """Orbit complex of a free involution.

    One generator per orbit, ordered by smallest member.  The coefficient of
    orbit ``[f]`` in the boundary of ``[c]`` is the multiplicity of ``f`` plus
    that of ``inv(f)`` in the boundary of ``c``.
    """
    if not is_free_involution(inv):
        raise ChainComplexError("quotient needs a fixed-point-free involution")
    reps = [orbit_representatives(p) for p in inv]
    orbit_of = []
    for p, r in zip(inv, reps):
        idx = {j: k for k, j in enumerate(r)}
        orbit_of.append([idx[min(j, p[j])] for j in range(len(p))])
    sizes = [len(r) for r in reps]
    boundaries: list[list[int]] = [[0] * sizes[0]] if sizes else []
    for i in range(1, len(sizes)):
        cols = []
        for j in reps[i]:
            col = c.boundaries[i][j]
            q = 0
            for k in iter_bits(col):
                q ^= 1 << orbit_of[i - 1][k]
            cols.append(q)
        boundaries.append(cols)
    return ChainComplexZ2(sizes, boundaries, c.truncated_above)


# -- hand-built fixtures ------------------------------------------------------

@dataclass
class Fixture:
    name: str
    complex: ChainComplexZ2
    involution: Involution
    expected_reduced: tuple[int, ...]


def _complex_from_cells(cells: list[list[tuple]], faces: dict) -> ChainComplexZ2:
    """Assemble a complex from named cells; ``faces[cell]`` lists boundary cells."""
    index = [{name: k for k, name in enumerate(level)} for level in cells]
    boundaries = [[0] * len(cells[0])]
    for i in range(1, len(cells)):
        cols = []
        for name in cells[i]:
            col = 0
            for f in faces[name]:
                col ^= 1 << index[i - 1][f]
            cols.append(col)
        boundaries.append(cols)
    names = [[str(x) for x in level] for level in cells]
    return ChainComplexZ2([len(level) for level in cells], boundaries, names=names)


def _cell_involution(cells, swap) -> Involution:
    index = [{name: k for k, name in enumerate(level)} for level in cells]
    return [tuple(index[i][swap(name)] for name in level) for i, level in enumerate(cells)]


def two_points_and_circle() -> Fixture:
    """Two swapped points plus a 4-gon with the antipodal rotation."""
    verts = [("p", 0), ("p", 1)] + [("v", k) for k in range(4)]
    edges = [("e", k) for k in range(4)]
    faces = {("e", k): [("v", k), ("v", (k + 1) % 4)] for k in range(4)}
    cells = [verts, edges]

    def swap(cell):
        kind, k = cell
        return (kind, 1 - k) if kind == "p" else (kind, (k + 2) % 4)

    c = _complex_from_cells(cells, faces)
    return Fixture("two_points_and_circle", c, _cell_involution(cells, swap), (2, 1))


def sphere_with_two_ears() -> Fixture:
    """Octahedral 2-sphere with a triangle loop glued at each pole.

    The involution is the antipodal map on the sphere and exchanges the ears.
    Octahedron vertices are the signed axes ``(axis, sign)``; the poles are
    ``(2, +1)`` and ``(2, -1)``.
    """
    axes = [(a, s) for a in range(3) for s in (1, -1)]
    verts = list(axes) + [("ear", s, k) for s in (1, -1) for k in range(2)]
    edges = [("oe", u, v) for u in axes for v in axes if u < v and u[0] != v[0]]
    tris = [("ot", (0, s0), (1, s1), (2, s2)) for s0 in (1, -1) for s1 in (1, -1) for s2 in (1, -1)]
    faces = {}
    for e in edges:
        faces[e] = [e[1], e[2]]
    for t in tris:
        _, x, y, z = t
        faces[t] = [("oe",) + tuple(sorted(p)) for p in ((x, y), (x, z), (y, z))]
    for s in (1, -1):
        pole = (2, s)
        a, b = ("ear", s, 0), ("ear", s, 1)
        for name, ends in ((("ee", s, 0), [pole, a]), (("ee", s, 1), [a, b]), (("ee", s, 2), [b, pole])):
            edges.append(name)
            faces[name] = ends
    cells = [verts, edges, tris]

    def anti(v):
        return (v[0], -v[1])

    def swap(cell):
        if cell[0] == "ear":
            return ("ear", -cell[1], cell[2])
        if cell[0] == "ee":
            return ("ee", -cell[1], cell[2])
        if cell[0] == "oe":
            return ("oe",) + tuple(sorted((anti(cell[1]), anti(cell[2]))))
        if cell[0] == "ot":
            return ("ot",) + tuple(anti(v) for v in cell[1:])
        return anti(cell)

    c = _complex_from_cells(cells, faces)
    return Fixture("sphere_with_two_ears", c, _cell_involution(cells, swap), (0, 2, 1))


def hollow_triangle() -> ChainComplexZ2:
    return ChainComplexZ2([3, 3], [[0, 0, 0], [0b011, 0b110, 0b101]])


def point() -> ChainComplexZ2:
    return ChainComplexZ2([1], [[0]])


def fixture_complexes() -> dict[str, Fixture]:
    return {f.name: f for f in (two_points_and_circle(), sphere_with_two_ears())}
