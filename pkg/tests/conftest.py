import random
from collections import deque

import pytest

from astopo import FbaParams, IgParams, build_graph, generate_fba, generate_ig

ACCEPTANCE_SEEDS = (0, 1, 2, 3, 4)
_acceptance_lines: list[str] = []


def random_graph(n, p, seed):
    """Erdos-Renyi G(n, p) built through the public constructor."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g, _ = build_graph(n, edges)
    g.check_invariants()
    return g


def bfs_sizes(n, edges, excluded=()):
    """Component sizes by BFS over a plain dict adjacency (test oracle)."""
    blocked = set(excluded)
    adj = {u: [] for u in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    sizes = []
    for s in range(n):
        if s in seen or s in blocked:
            continue
        seen.add(s)
        queue, count = deque([s]), 0
        while queue:
            u = queue.popleft()
            count += 1
            for v in adj[u]:
                if v not in seen and v not in blocked:
                    seen.add(v)
                    queue.append(v)
        sizes.append(count)
    return sizes


@pytest.fixture(scope="session")
def paper_graphs():
    """Paper-scale (N = 11122) IG and FBA graphs for the acceptance seeds."""
    return {
        "ig": {s: generate_ig(IgParams(), s) for s in ACCEPTANCE_SEEDS},
        "fba": {s: generate_fba(FbaParams(), s) for s in ACCEPTANCE_SEEDS},
    }


@pytest.fixture
def acceptance_line():
    def record(text):
        _acceptance_lines.append(text)
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
