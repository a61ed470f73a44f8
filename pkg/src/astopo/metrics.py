"""Structural measurements: degree CCDF, power-law fit, rich-club, triangles."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph


class MetricError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeCcdf:
    points: list[tuple[int, float]]


@dataclass(frozen=True)
class RichClubCurve:
    points: list[tuple[float, float]]

    def at(self, r: float) -> float:
        for x, phi in self.points:
            if x == r:
                return phi
        raise KeyError(r)


@dataclass(frozen=True)
class TriangleStats:
    per_node: list[int]
    max_kt: int
    mean_kt: float
    ccdf: list[tuple[int, float]]


def _ccdf(values: Sequence[int]) -> list[tuple[int, float]]:
    """Fraction of ``values`` at or above each distinct value, ascending."""
    n = len(values)
    counts = sorted(Counter(values).items())
    points = []
    remaining = n
    for v, c in counts:
        points.append((v, remaining / n))
        remaining -= c
    return points


def degree_ccdf(g: Graph) -> DegreeCcdf:
    if g.node_count < 1:
        raise MetricError("degree CCDF of an empty graph is undefined")
    return DegreeCcdf(_ccdf(g.degrees()))


def fit_power_law_exponent(ccdf: DegreeCcdf, kmin: int = 3) -> float:
    """Estimate gamma in ``P(k) ~ k**-gamma`` from the degree CCDF.

    Fits a least-squares line to ``log p`` against ``log k`` over points with
    ``k >= kmin``. The CCDF of a gamma power law falls as ``k**(1 - gamma)``,
    so the returned exponent is ``1 - slope``.
    """
    pts = [(k, p) for k, p in ccdf.points if k >= kmin and k > 0]
    if len(pts) < 3:
        raise MetricError(
            f"insufficient range: {len(pts)} CCDF points with k >= {kmin}, need 3"
        )
    x = np.log([k for k, _ in pts])
    y = np.log([p for _, p in pts])
    if np.ptp(x) == 0:
        raise MetricError("insufficient range: zero variance in log k")
    slope, _ = np.polyfit(x, y, 1)
    return float(1.0 - slope)


def rank_nodes(g: Graph) -> list[int]:
    """Node ids by decreasing degree, ties broken by ascending id."""
    deg = g.degrees()
    return sorted(range(g.node_count), key=lambda u: (-deg[u], u))


def log_grid(lo: float, hi: float, count: int) -> list[float]:
    """``count`` log-spaced values from ``lo`` to ``hi`` inclusive, deduplicated."""
    if count == 1:
        return [hi]
    values = np.geomspace(lo, hi, count).tolist()
    values[0], values[-1] = lo, hi
    return sorted(set(values))


def default_r_grid(n: int, count: int = 64) -> list[float]:
    return log_grid(min(2.0 / n, 1.0), 1.0, count)


def club_size(r: float, n: int) -> int:
    return max(2, math.floor(r * n))


def rich_club_edge_counts(g: Graph) -> list[int]:
    """Entry ``i`` is the number of edges among the ``i`` top-ranked nodes."""
    order = rank_nodes(g)
    position = [0] * g.node_count
    for i, u in enumerate(order):
        position[u] = i
    counts = [0] * (g.node_count + 1)
    inside = 0
    for i, u in enumerate(order):
        inside += sum(1 for v in g.neighbors(u) if position[v] < i)
        counts[i + 1] = inside
    return counts


def rich_club_curve(g: Graph, r_values: Iterable[float] | None = None) -> RichClubCurve:
    """Rich-club connectivity phi(r) for each normalized rank ``r``.

    The club for ``r`` holds the ``max(2, floor(r * N))`` best-ranked nodes and
    phi is the share of the possible links among them that exist.
    """
    n = g.node_count
    if n < 2:
        raise MetricError("rich-club connectivity needs at least 2 nodes")
    if r_values is None:
        r_values = default_r_grid(n)
    rs = sorted(set(r_values))
    for r in rs:
        if not 0.0 < r <= 1.0:
            raise MetricError(f"rank fraction {r} outside (0, 1]")
    counts = rich_club_edge_counts(g)
    points = []
    for r in rs:
        size = min(club_size(r, n), n)
        points.append((r, counts[size] / (size * (size - 1) / 2)))
    return RichClubCurve(points)


def triangle_coefficients(g: Graph) -> TriangleStats:
    """Per-node triangle counts K_t, the number of links among a node's neighbors."""
    per_edge_sum = [0] * g.node_count
    for u, v in g.edges():
        shared = len(g.neighbor_set(u) & g.neighbor_set(v))
        if shared:
            per_edge_sum[u] += shared
            per_edge_sum[v] += shared
    # each triangle at u is seen through both of u's edges in it
    per_node = [s // 2 for s in per_edge_sum]
    max_kt, mean_kt = triangle_summary_values(per_node)
    return TriangleStats(per_node, max_kt, mean_kt, _ccdf(per_node) if per_node else [])


def triangle_summary_values(per_node: Sequence[int]) -> tuple[int, float]:
    if not per_node:
        return 0, 0.0
    return max(per_node), sum(per_node) / len(per_node)


def triangle_summary(stats: TriangleStats) -> tuple[int, float]:
    return triangle_summary_values(stats.per_node)
