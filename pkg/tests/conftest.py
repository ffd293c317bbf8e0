from __future__ import annotations

import random

import pytest

from earspec import Graph, complete_bipartite_graph, complete_graph, cycle_graph

# (criterion, passed, detail) rows filled in by test_acceptance
ACCEPTANCE: list[tuple[int, bool, str]] = []


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def theta(*lengths: int) -> Graph:
    """Internally disjoint paths of the given lengths between vertices 0 and 1."""
    edges, nxt = [], 2
    for k in lengths:
        path = [0] + list(range(nxt, nxt + k - 1)) + [1]
        nxt += k - 1
        edges += list(zip(path, path[1:]))
    return Graph.from_edges(nxt, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def zoo() -> dict[str, Graph]:
    return {
        "K2": complete_graph(2),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "K4": complete_graph(4),
        "K33": complete_bipartite_graph(3, 3),
        "bowtie": bowtie(),
        "petersen": petersen(),
        "theta335": theta(3, 3, 5),
    }


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
