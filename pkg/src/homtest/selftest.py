"""Fixture battery behind ``homtest selftest``.

Each battery item is a JSON object with a ``name``, a ``kind`` and the
expected values:

* ``betti``   -- ``graph``, ``test``, ``reduced_betti``
* ``bound``   -- ``graph``, ``test``, ``bound`` (optionally ``max_dim``)
* ``chi``     -- ``graph``, ``chi``
* ``same_cells`` -- ``graph``, ``other``, ``test``: identical cell sets
* ``fixture`` -- ``fixture`` (a hand-built complex), ``reduced_betti``

Graphs are given as edge-list text.
"""

from __future__ import annotations

from .bound import homology_test
from .graph import chromatic_number_exact, get_test_graph, parse_edge_list
from .homcomplex import boundary_complex, build_hom
from .z2algebra import betti, fixture_complexes, is_free_involution, validate


def same_betti(got, expected) -> bool:
    """Equal up to trailing zeros."""
    got, expected = list(got), list(expected)
    width = max(len(got), len(expected))
    return got + [0] * (width - len(got)) == expected + [0] * (width - len(expected))


def _check(item: dict) -> tuple[bool, str]:
    kind = item["kind"]
    if kind == "fixture":
        fx = fixture_complexes()[item["fixture"]]
        got = list(betti(fx.complex).values)
        ok = validate(fx.complex)[0] and is_free_involution(fx.involution)
        return ok and same_betti(got, item["reduced_betti"]), f"reduced betti {got}"
    g = parse_edge_list(item["graph"])
    if kind == "chi":
        got = chromatic_number_exact(g)
        return got == item["chi"], f"chi {got}"
    t = get_test_graph(item["test"])
    if kind == "betti":
        c = boundary_complex(build_hom(t, g))
        got = list(betti(c).values)
        return validate(c)[0] and same_betti(got, item["reduced_betti"]), f"reduced betti {got}"
    if kind == "bound":
        claim = homology_test(t, g, item.get("max_dim", 2))
        return claim.lower_bound == item["bound"], f"bound {claim.lower_bound}"
    if kind == "same_cells":
        other = parse_edge_list(item["other"])
        same = build_hom(t, g).cells == build_hom(t, other).cells
        return same, "cell sets differ" if not same else "identical"
    raise ValueError(f"unknown battery item kind {kind!r}")


def check_item(item: dict) -> dict:
    name = item.get("name", "<unnamed>") if isinstance(item, dict) else "<malformed>"
    try:
        passed, detail = _check(item)
    except Exception as exc:  # a broken item is a failed item
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return {"name": name, "passed": bool(passed), "detail": detail}
