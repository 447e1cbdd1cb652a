import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hereditary.forbidden import enumerate_graphs  # noqa: E402
from hereditary.graph import Graph  # noqa: E402


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@pytest.fixture(scope="session")
def graphs_upto():
    cache = {}

    def get(max_n):
        if max_n not in cache:
            cache[max_n] = [g for n in range(max_n + 1) for g in enumerate_graphs(n)]
        return cache[max_n]

    return get


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
