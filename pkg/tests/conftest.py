import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402

from gksep import generators as gen  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs_upto5():
    return [g for n in range(6) for g in oracles.all_graphs(n)]


@pytest.fixture(scope="session")
def g2_corpus():
    """Certified G_2 members with at least one edge, 5..10 vertices."""
    out = []
    i = 0
    while len(out) < 120:
        g = gen.random_g2_sample(5 + i % 6, (0.25, 0.4, 0.55, 0.7)[i % 4], 10_000 + i)
        if g is not None and g.m:
            out.append(g)
        i += 1
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
