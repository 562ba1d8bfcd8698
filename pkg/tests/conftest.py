import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ribbonpoly.rgraph import RibbonGraph, from_cycles  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"


def torus_bouquet() -> RibbonGraph:
    """One vertex, two interleaved loops a, b on the torus."""
    return RibbonGraph((2, 3, 1, 0))


def theta_torus() -> RibbonGraph:
    """Theta graph with rotation (a b c) at both vertices; torus."""
    return from_cycles([[0, 2, 4], [1, 3, 5]])


def random_map(rng: random.Random, max_edges: int, min_edges: int = 0) -> RibbonGraph:
    m = rng.randint(min_edges, max_edges)
    sigma = list(range(2 * m))
    rng.shuffle(sigma)
    return RibbonGraph(tuple(sigma), rng.choice([0, 0, 0, 1]))


@pytest.fixture
def bouquet():
    return torus_bouquet()


@pytest.fixture
def theta():
    return theta_torus()


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
