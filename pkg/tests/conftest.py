from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from supereulerian.enumeration import enumerate_connected  # noqa: E402
from supereulerian.graph_core import Graph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def small_graphs(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def named(name: str) -> Graph:
    """A few fixed graphs, vertex-labelled in the obvious way."""
    cycle = lambda n: Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])  # noqa: E731
    path = lambda n: Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])  # noqa: E731
    complete = lambda n: Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])  # noqa: E731
    table = {
        "K1": Graph.empty(1),
        "K2": complete(2),
        "K3": complete(3),
        "K4": complete(4),
        "K5": complete(5),
        "P3": path(3),
        "P4": path(4),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "K13": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
        "K15": Graph.from_edges(6, [(0, i) for i in range(1, 6)]),
        "K23": Graph.from_edges(5, [(h, i) for h in (0, 1) for i in range(2, 5)]),
        "K24": Graph.from_edges(6, [(h, i) for h in (0, 1) for i in range(2, 6)]),
        "prism": Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        "petersen": Graph.from_edges(
            10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            + [(i, i + 5) for i in range(5)]),
    }
    return table[name]


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
