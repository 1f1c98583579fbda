import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scgraph.graph import Graph  # noqa: E402


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def bull():
    # triangle 0-1-2 with pendants 3 (on 0) and 4 (on 1)
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def random_perm(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def P4():
    return path_graph(4)


@pytest.fixture
def C5():
    return cycle_graph(5)


@pytest.fixture
def BULL():
    return bull()


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
