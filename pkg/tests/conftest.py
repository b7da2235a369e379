from __future__ import annotations

import itertools
import random

import pytest

from stressfree.graph import Graph


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return Graph(n, frozenset(e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p))


def random_relabel(rng: random.Random, g: Graph) -> tuple[Graph, dict[int, int]]:
    perm = list(g.vertices)
    rng.shuffle(perm)
    mapping = dict(zip(g.vertices, perm))
    return g.relabel(mapping), mapping


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1729)


# one pass/fail line per acceptance criterion in the terminal summary
_CRITERIA: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _CRITERIA[report.nodeid.split("::")[-1]] = (report.outcome.upper(), report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, (outcome, duration) in sorted(_CRITERIA.items(), key=lambda kv: int(kv[0].split("_")[2])):
        terminalreporter.write_line(f"{outcome:6} {name} ({duration:.1f} s)")
