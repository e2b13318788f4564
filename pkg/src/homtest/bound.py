"""Chromatic lower bounds from the mod-2 homology of Hom(T, G).

If the reduced homology of Hom(T, G) vanishes through dimension ``d`` and
``T`` is a Stiefel-Whitney test graph, then ``chi(G) >= d + 1 + chi(T)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, TestGraph, chromatic_number_exact, fold_reduce
from .homcomplex import (DEFAULT_CELL_CAP, ResourceCapExceeded, boundary_complex, boundary_matrix, build_hom,
                         hom_is_nonempty)
from .z2algebra import BettiVector, betti, gf2_rank

DEFAULT_MAX_CHECK_DIM = 2


class InvariantViolation(RuntimeError):
    pass


def trivial_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    return 2 if g.m else 1


@dataclass
class BoundClaim:
    test_name: str
    chi_t: int
    lower_bound: int | None
    d: int | None
    evidence: BettiVector | None = None
    empty: bool = False
    truncation_limited: bool = False
    cap_limited: bool = False
    f_vector: list[int] = field(default_factory=list)
    millis: float = 0.0
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.test_name,
            "chi_t": self.chi_t,
            "empty": self.empty,
            "d": self.d,
            "bound": self.lower_bound,
            "betti": list(self.evidence.values) if self.evidence is not None else [],
            "f_vector": list(self.f_vector),
            "truncation_limited": self.truncation_limited,
            "cap_limited": self.cap_limited,
            "millis": round(self.millis, 3),
            "error": self.error,
        }


def homology_test(t: TestGraph, g: Graph, max_check_dim: int = DEFAULT_MAX_CHECK_DIM,
                  cell_cap: int = DEFAULT_CELL_CAP) -> BoundClaim:
    """Largest certified ``d`` and the resulting bound for one test graph.

    The complex is built one dimension at a time: to decide ``b~_k`` only cells
    up to dimension ``k + 1`` are needed, so a nonzero class found low down
    stops the search early.  If the build for ``b~_k`` exceeds ``cell_cap``
    the claim keeps the ``d = k - 1`` already certified and is flagged
    ``cap_limited``; a nonempty complex always certifies ``d = -1``.
    """
    if max_check_dim < 0:
        raise ValueError("max_check_dim must be >= 0")
    start = time.perf_counter()
    if not hom_is_nonempty(t, g):
        return BoundClaim(t.name, t.chi, trivial_bound(g), None, empty=True,
                          millis=(time.perf_counter() - start) * 1e3)
    # rank D_i depends only on levels i-1 and i, which every truncated build shares
    ranks = {0: 0}
    values: list[int] = []
    bv = None
    f_vector: list[int] = []
    d, capped, cap_hit = max_check_dim, True, False
    for k in range(max_check_dim + 1):
        try:
            h = build_hom(t, g, k + 1, cell_cap)
        except ResourceCapExceeded:
            d, capped, cap_hit = k - 1, False, True
            break
        f_vector = h.f_vector
        if not h.truncated:
            bv = betti(boundary_complex(h), reduced=True)
            first = bv.first_nonzero()
            if first is not None and first <= max_check_dim:
                d, capped = first - 1, False
            break
        ranks[k + 1] = gf2_rank(boundary_matrix(h, k + 1))
        values.append(h.f_vector[k] - ranks[k] - ranks[k + 1] - (1 if k == 0 else 0))
        bv = BettiVector(True, tuple(values), k, truncated=True)
        if values[k]:
            d, capped = k - 1, False
            break
    return BoundClaim(t.name, t.chi, d + 1 + t.chi, d, bv, truncation_limited=capped, cap_limited=cap_hit,
                      f_vector=f_vector, millis=(time.perf_counter() - start) * 1e3)


@dataclass
class BoundReport:
    n: int
    m: int
    folded_n: int
    trivial_bound: int
    claims: list[BoundClaim]
    exact_chi: int | None = None

    @property
    def best_bound(self) -> int:
        bounds = [c.lower_bound for c in self.claims if c.lower_bound is not None]
        return max([self.trivial_bound] + bounds)

    @property
    def failed(self) -> list[BoundClaim]:
        return [c for c in self.claims if c.error is not None]

    @property
    def cap_limited(self) -> list[BoundClaim]:
        return [c for c in self.claims if c.cap_limited]

    def to_dict(self, timings: bool = True) -> dict:
        tests = [c.to_dict() for c in self.claims]
        if not timings:
            for entry in tests:
                entry["millis"] = 0.0
        out = {"graph": {"n": self.n, "m": self.m, "folded_n": self.folded_n},
               "trivial_bound": self.trivial_bound}
        if self.exact_chi is not None:
            out["exact_chi"] = self.exact_chi
        out["tests"] = tests
        out["best_bound"] = self.best_bound
        return out


def run_suite(g: Graph, tests: Sequence[TestGraph], max_check_dim: int = DEFAULT_MAX_CHECK_DIM,
              with_exact: bool = False, fold: bool = True, cell_cap: int = DEFAULT_CELL_CAP,
              exact_limit: int = 20) -> BoundReport:
    target = fold_reduce(g)[0] if fold else g
    claims = []
    for t in tests:
        try:
            claims.append(homology_test(t, target, max_check_dim, cell_cap))
        except ResourceCapExceeded as exc:
            claims.append(BoundClaim(t.name, t.chi, None, None, error=str(exc)))
    exact = chromatic_number_exact(g, exact_limit) if with_exact else None
    report = BoundReport(g.n, g.m, target.n, trivial_bound(g), claims, exact)
    if exact is not None and report.best_bound > exact:
        raise InvariantViolation(f"bound {report.best_bound} exceeds chromatic number {exact}")
    return report


def fold_equivalence_check(t: TestGraph, g: Graph, max_dim: int | str = "all",
                           cell_cap: int = DEFAULT_CELL_CAP) -> bool:
    """Do Hom(T, g) and Hom(T, fold_reduce(g)) have the same Betti numbers?"""
    folded = fold_reduce(g)[0]
    a = betti(boundary_complex(build_hom(t, g, max_dim, cell_cap)))
    b = betti(boundary_complex(build_hom(t, folded, max_dim, cell_cap)))
    if a.empty or b.empty:
        return a.empty == b.empty
    through = min(a.complete_through, b.complete_through)
    if not a.truncated and not b.truncated:
        through = max(a.complete_through, b.complete_through)
    return all(a[i] == b[i] for i in range(through + 1))
