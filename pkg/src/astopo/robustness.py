"""Node-attack simulation measured by giant-component decay."""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, largest_component
from .metrics import log_grid, rank_nodes

STRATEGIES = ("targeted_static", "targeted_adaptive", "random")


class AttackError(ValueError):
    pass


@dataclass(frozen=True)
class AttackStrategy:
    kind: str = "targeted_static"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in STRATEGIES:
            raise AttackError(f"unknown strategy {self.kind!r}; choose from {STRATEGIES}")


@dataclass(frozen=True)
class AttackCurve:
    points: list[tuple[float, float]]

    def at(self, f: float) -> float:
        for x, s in self.points:
            if x == f:
                return s
        raise KeyError(f)


def default_f_grid(n: int, count: int = 32) -> list[float]:
    """``0`` followed by ``count`` log-spaced fractions from ``1/N`` to ``0.1``."""
    return [0.0] + log_grid(min(1.0 / n, 0.1), 0.1, count)


def removal_count(f: float, n: int) -> int:
    # tolerance absorbs float products such as 0.29 * 100 = 28.999999999999996
    return min(n, math.floor(f * n + 1e-9))


def adaptive_order(g: Graph, count: int) -> list[int]:
    """First ``count`` removals, each the current highest-degree survivor."""
    deg = g.degrees()
    alive = [True] * g.node_count
    heap = [(-d, u) for u, d in enumerate(deg)]
    heapq.heapify(heap)
    order = []
    while len(order) < count and heap:
        d, u = heapq.heappop(heap)
        if not alive[u] or -d != deg[u]:
            continue
        alive[u] = False
        order.append(u)
        for v in g.neighbors(u):
            if alive[v]:
                deg[v] -= 1
                heapq.heappush(heap, (-deg[v], v))
    return order


def removal_order(g: Graph, strategy: AttackStrategy, count: int) -> list[int]:
    if strategy.kind == "targeted_static":
        return rank_nodes(g)[:count]
    if strategy.kind == "targeted_adaptive":
        return adaptive_order(g, count)
    order = list(range(g.node_count))
    random.Random(strategy.seed).shuffle(order)
    return order[:count]


def attack_curve(
    g: Graph,
    strategy: AttackStrategy = AttackStrategy(),
    fractions: Sequence[float] | None = None,
) -> AttackCurve:
    """Giant-component size, as a share of the original N, after removing
    the first ``floor(f * N)`` nodes of the strategy's order for each ``f``.
    """
    n = g.node_count
    if fractions is None:
        fractions = default_f_grid(n)
    fractions = list(fractions)
    for a, b in zip(fractions, fractions[1:]):
        if not a < b:
            raise AttackError("fractions must be strictly increasing")
    if fractions and not (0.0 <= fractions[0] and fractions[-1] < 1.0):
        raise AttackError("fractions must lie in [0, 1)")
    counts = [removal_count(f, n) for f in fractions]
    order = removal_order(g, strategy, counts[-1] if counts else 0)
    points = []
    for f, k in zip(fractions, counts):
        points.append((f, largest_component(g, order[:k]) / n))
    return AttackCurve(points)


def mean_curve(curves: Iterable[AttackCurve]) -> AttackCurve:
    """Pointwise mean of curves sampled on the same fractions."""
    curves = list(curves)
    xs = [f for f, _ in curves[0].points]
    for c in curves[1:]:
        if [f for f, _ in c.points] != xs:
            raise AttackError("curves are sampled on different fractions")
    return AttackCurve([
        (f, sum(c.points[i][1] for c in curves) / len(curves))
        for i, f in enumerate(xs)
    ])
