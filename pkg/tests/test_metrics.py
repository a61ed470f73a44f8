import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from astopo.generators import IgParams, generate_ig
from astopo.graph import build_graph
from astopo.metrics import (
    DegreeCcdf,
    MetricError,
    TriangleStats,
    club_size,
    default_r_grid,
    degree_ccdf,
    fit_power_law_exponent,
    rank_nodes,
    rich_club_curve,
    triangle_coefficients,
    triangle_summary,
)
from conftest import random_graph


def complete(n):
    return build_graph(n, itertools.combinations(range(n), 2))[0]


def star(n):
    return build_graph(n, [(0, i) for i in range(1, n)])[0]


def graph_with_degrees(degrees):
    """Disjoint stars whose centers have the given degrees (center ids first)."""
    edges, nxt = [], len(degrees)
    for c, d in enumerate(degrees):
        for _ in range(d):
            edges.append((c, nxt))
            nxt += 1
    return build_graph(nxt, edges)[0]


# degree CCDF

def test_ccdf_triangle():
    assert degree_ccdf(complete(3)).points == [(2, 1.0)]


def test_ccdf_star():
    assert degree_ccdf(star(4)).points == [(1, 1.0), (3, 0.25)]


def test_ccdf_matches_histogram_oracle():
    g = generate_ig(IgParams(n_target=2000), 3)
    hist = Counter(len(g.neighbors(u)) for u in range(g.node_count))
    expected = []
    for k in sorted(hist):
        expected.append((k, sum(c for d, c in hist.items() if d >= k) / g.node_count))
    assert degree_ccdf(g).points == expected


@settings(max_examples=50)
@given(seed=st.integers(0, 10**6), p=st.floats(0.01, 0.3))
def test_ccdf_monotone(seed, p):
    pts = degree_ccdf(random_graph(40, p, seed)).points
    assert pts[0][1] == 1.0
    for (k1, p1), (k2, p2) in zip(pts, pts[1:]):
        assert k1 < k2 and p1 > p2 > 0


# power-law fit

def test_fit_recovers_exact_ccdf():
    ccdf = DegreeCcdf([(k, k ** -1.2) for k in range(1, 101)])
    assert fit_power_law_exponent(ccdf, kmin=1) == pytest.approx(2.2, abs=0.05)


@given(gamma=st.floats(1.5, 3.5), decades=st.floats(2.0, 3.0))
def test_fit_recovers_planted_exponent(gamma, decades):
    kmax = int(10 ** decades)
    ks = sorted({int(round(10 ** (decades * i / 60))) for i in range(61)} | {kmax})
    ccdf = DegreeCcdf([(k, k ** (1 - gamma)) for k in ks])
    assert fit_power_law_exponent(ccdf, kmin=1) == pytest.approx(gamma, abs=0.05)


def test_fit_regular_graph_insufficient_range():
    with pytest.raises(MetricError, match="insufficient range"):
        fit_power_law_exponent(degree_ccdf(complete(6)), kmin=3)


def test_fit_respects_kmin():
    ccdf = DegreeCcdf([(1, 1.0), (2, 0.9), (3, 0.5), (4, 0.25), (8, 0.0625)])
    with pytest.raises(MetricError):
        fit_power_law_exponent(ccdf, kmin=5)
    # log-log line through (4, 1/4) and (8, 1/16) has slope -2
    three = DegreeCcdf([(4, 0.25), (8, 0.0625), (16, 0.015625)])
    assert fit_power_law_exponent(three, kmin=4) == pytest.approx(3.0)


# ranking

def test_rank_by_degree():
    assert rank_nodes(graph_with_degrees([5, 2, 9]))[:3] == [2, 0, 1]


def test_rank_ties_by_id():
    assert rank_nodes(graph_with_degrees([3, 3]))[:2] == [0, 1]


@settings(max_examples=30)
@given(seed=st.integers(0, 10**6))
def test_rank_is_sorted_permutation(seed):
    g = random_graph(50, 0.1, seed)
    order = rank_nodes(g)
    assert sorted(order) == list(range(50))
    for a, b in zip(order, order[1:]):
        assert g.degree(a) > g.degree(b) or (g.degree(a) == g.degree(b) and a < b)


# rich-club

def test_rich_club_complete_graph():
    curve = rich_club_curve(complete(5), [0.2, 0.4, 0.6, 1.0])
    assert [phi for _, phi in curve.points] == [1.0] * 4


def test_rich_club_star_pair():
    curve = rich_club_curve(star(5), [0.4])
    assert club_size(0.4, 5) == 2
    assert curve.points == [(0.4, 1.0)]


def test_rich_club_full_density():
    g = random_graph(80, 0.1, 11)
    phi = rich_club_curve(g, [1.0]).points[0][1]
    assert phi == 2 * g.edge_count / (80 * 79)


def test_rich_club_rejects_bad_r():
    for r in (0.0, 1.5, -0.1):
        with pytest.raises(MetricError):
            rich_club_curve(star(5), [r])


def test_default_r_grid():
    grid = default_r_grid(11122)
    assert len(grid) == 64
    assert grid[0] == 2 / 11122 and grid[-1] == 1.0
    assert all(a < b for a, b in zip(grid, grid[1:]))


@pytest.mark.parametrize("seed", range(10))
def test_rich_club_matches_pairwise_recount(seed):
    g = random_graph(200, 0.04, seed) if seed % 2 else generate_ig(IgParams(n_target=200), seed)
    order = rank_nodes(g)
    curve = rich_club_curve(g)
    for r, phi in curve.points:
        n_r = max(2, math.floor(r * g.node_count))
        club = order[:n_r]
        links = sum(1 for a, b in itertools.combinations(club, 2) if g.has_edge(a, b))
        assert phi == links / (n_r * (n_r - 1) / 2)


# triangles

def test_k4_triangles():
    assert triangle_coefficients(complete(4)).per_node == [3, 3, 3, 3]


def test_triangle_plus_pendant():
    g, _ = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    stats = triangle_coefficients(g)
    assert stats.per_node == [1, 1, 1, 0]
    assert stats.ccdf == [(0, 1.0), (1, 0.75)]


def brute_force_triangles(g):
    per_node = [0] * g.node_count
    total = 0
    for a, b, c in itertools.combinations(range(g.node_count), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            total += 1
            for x in (a, b, c):
                per_node[x] += 1
    return per_node, total


@pytest.mark.parametrize("seed", range(100))
def test_triangles_match_triple_enumeration(seed):
    g = random_graph(50, 0.05 + 0.25 * (seed % 5) / 4, seed)
    per_node, total = brute_force_triangles(g)
    stats = triangle_coefficients(g)
    assert stats.per_node == per_node
    assert sum(stats.per_node) == 3 * total


def edge_iterator_triangle_count(g):
    return sum(
        1 for u, v in g.edges() for w in g.neighbors(v) if w > v and g.has_edge(u, w)
    )


def test_triangle_sum_against_edge_iterator():
    g = generate_ig(IgParams(n_target=3000), 8)
    assert sum(triangle_coefficients(g).per_node) == 3 * edge_iterator_triangle_count(g)


def test_summary_values():
    stats = TriangleStats([0, 1, 1], 1, 2 / 3, [])
    assert triangle_summary(stats) == (1, 2 / 3)


def test_tree_is_triangle_free():
    g, _ = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert triangle_summary(triangle_coefficients(g)) == (0, 0)
