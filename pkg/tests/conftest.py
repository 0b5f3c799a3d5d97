import random

import pytest
from hypothesis import strategies as st

from weightgraph.graph import SimpleGraph

ACCEPTANCE_RESULTS = []


@st.composite
def graphs(draw, min_p=1, max_p=10):
    p = draw(st.integers(min_p, max_p))
    pairs = [(u, v) for u in range(1, p + 1) for v in range(u + 1, p + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(p, [e for e, keep in zip(pairs, mask) if keep])


def random_graph(rng, p, density=0.5):
    return SimpleGraph(p, [(u, v) for u in range(1, p + 1) for v in range(u + 1, p + 1)
                           if rng.random() < density])


def random_perm(rng, p):
    perm = list(range(1, p + 1))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
