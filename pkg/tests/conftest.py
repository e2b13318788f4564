import random

import pytest
from hypothesis import strategies as st

from homtest.graph import Graph
from homtest.homcomplex import boundary_complex
from homtest.z2algebra import betti, euler_characteristic, validate


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, picked) if keep])


def assert_complex_invariants(h):
    """Face closure, D.D = 0 and the Euler-Betti identity for a built Hom complex."""
    c = boundary_complex(h)  # raises if a face is missing
    ok, witness = validate(c)
    assert ok, witness
    if not h.truncated and not c.is_empty():
        unreduced = betti(c, reduced=False)
        assert sum((-1) ** i * b for i, b in enumerate(unreduced.values)) == euler_characteristic(c)
    return c


@pytest.fixture
def rng():
    return random.Random(12345)


# criterion number -> (title, passed, detail, seconds); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail, seconds = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d} {title} ({seconds:.1f}s): {detail}")
