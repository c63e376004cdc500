import itertools
import random

import pytest

from qclique.graph import Graph

FIG_4_1 = Graph.from_edges(2, [(1, 2)])


def all_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [q for q in itertools.combinations(range(1, n + 1), 2) if rng.random() < p])


def small_corpus():
    """Every graph with n <= 4."""
    return [g for n in range(1, 5) for g in all_graphs(n)]


def random_corpus(count=100, lo=5, hi=10, seed=7):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(lo, hi)) for _ in range(count)]


@pytest.fixture
def fig41():
    return FIG_4_1


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
