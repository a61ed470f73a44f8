"""Seeded growth models for Internet-like power-law topologies.

Both generators use :class:`random.Random` (Mersenne Twister) seeded with
the caller's integer, so a given ``(params, seed)`` pair always yields the
same graph under the same Python implementation.

FBA (fitness Barabasi-Albert)
    Every node draws a fitness at birth. Each new node brings ``m`` links to
    distinct existing nodes chosen with probability proportional to
    ``fitness * degree``.

IG (interactive growth)
    Every step adds one node and exactly three links. With probability
    ``p_one_host`` the new node joins one host and the host gains two new
    links to peers; otherwise the new node joins two hosts and the first
    host gains one new link to a peer. Hosts and peers are chosen with
    probability proportional to degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .graph import Graph, GraphBuilder, largest_component
from .sampling import SumTree

# Preferential redraws before a peer choice falls back to a uniform pick.
MAX_PREFERENTIAL_TRIES = 64

FITNESS_LAWS: dict[str, Callable[[random.Random], float]] = {
    "uniform": lambda rng: rng.random(),
    "exponential": lambda rng: rng.expovariate(1.0),
}


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class SeedGraphSpec:
    n0: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def star(cls, n0: int = 8) -> "SeedGraphSpec":
        return cls(n0, tuple((0, i) for i in range(1, n0)))

    @classmethod
    def cycle(cls, n0: int) -> "SeedGraphSpec":
        return cls(n0, tuple((i, (i + 1) % n0) for i in range(n0)))

    @classmethod
    def complete(cls, n0: int) -> "SeedGraphSpec":
        return cls(n0, tuple((i, j) for i in range(n0) for j in range(i + 1, n0)))

    def builder(self) -> GraphBuilder:
        b = GraphBuilder(self.n0)
        for u, v in self.edges:
            if not b.add_edge(u, v):
                raise ParameterError(f"seed graph edge ({u}, {v}) is a loop or repeat")
        g = b.freeze()
        if self.n0 < 2 or largest_component(g) != self.n0:
            raise ParameterError("seed graph must be connected with at least 2 nodes")
        return b

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class FbaParams:
    n_target: int = 11122
    m: int = 3
    seed_graph: SeedGraphSpec = field(default_factory=SeedGraphSpec.star)
    fitness_law: str = "uniform"

    def validate(self) -> None:
        n0 = self.seed_graph.n0
        if self.n_target <= n0:
            raise ParameterError(f"n_target={self.n_target} must exceed n0={n0}")
        if not 1 <= self.m <= n0:
            raise ParameterError(f"m={self.m} must lie in [1, n0={n0}]")
        if self.fitness_law not in FITNESS_LAWS:
            raise ParameterError(
                f"unknown fitness law {self.fitness_law!r}; "
                f"choose from {sorted(FITNESS_LAWS)}"
            )


@dataclass(frozen=True)
class IgParams:
    n_target: int = 11122
    p_one_host: float = 0.4
    seed_graph: SeedGraphSpec = field(default_factory=SeedGraphSpec.star)

    def validate(self) -> None:
        n0 = self.seed_graph.n0
        if self.n_target <= n0:
            raise ParameterError(f"n_target={self.n_target} must exceed n0={n0}")
        if not 0.0 <= self.p_one_host <= 1.0:
            raise ParameterError(f"p_one_host={self.p_one_host} outside [0, 1]")
        if n0 < 4:
            raise ParameterError(f"IG needs a seed graph with n0 >= 4, got {n0}")


def _check_seed(seed: int) -> random.Random:
    if not 0 <= seed < 2**64:
        raise ParameterError(f"seed {seed} is not a 64-bit unsigned integer")
    return random.Random(seed)


def grow_fba(params: FbaParams, seed: int) -> Iterator[tuple[int, GraphBuilder]]:
    """Yield ``(new_node, builder)`` after each FBA growth step."""
    params.validate()
    rng = _check_seed(seed)
    draw_fitness = FITNESS_LAWS[params.fitness_law]
    n = params.n_target
    b = params.seed_graph.builder()
    fitness = [draw_fitness(rng) for _ in range(b.node_count)]
    weights = SumTree([0.0] * n)
    for u in range(b.node_count):
        weights[u] = fitness[u] * b.degree(u)

    for _ in range(n - b.node_count):
        targets: list[int] = []
        tries = 0
        while len(targets) < params.m:
            t = weights.sample(rng)
            if t not in targets:
                targets.append(t)
                continue
            tries += 1
            if tries > 10_000 * params.m:
                raise ParameterError(
                    "fewer than m existing nodes have positive attachment weight"
                )
        new = b.add_node()
        fitness.append(draw_fitness(rng))
        for t in targets:
            b.add_edge(new, t)
            weights[t] = fitness[t] * b.degree(t)
        weights[new] = fitness[new] * b.degree(new)
        yield new, b


def generate_fba(params: FbaParams, seed: int) -> Graph:
    b = None
    for _, b in grow_fba(params, seed):
        pass
    return b.freeze()


class _IgState:
    def __init__(self, params: IgParams, seed: int):
        self.rng = _check_seed(seed)
        self.b = params.seed_graph.builder()
        self.weights = SumTree([0] * params.n_target)
        for u in range(self.b.node_count):
            self.weights[u] = self.b.degree(u)

    def link(self, u: int, v: int) -> None:
        added = self.b.add_edge(u, v)
        assert added, (u, v)
        self.weights[u] = self.b.degree(u)
        self.weights[v] = self.b.degree(v)

    def free_peers(self, anchor: int, exclude: tuple[int, ...]) -> int:
        """How many nodes ``anchor`` could still gain an interior link to."""
        b = self.b
        blocked = sum(1 for c in exclude if c != anchor and not b.has_edge(anchor, c))
        return b.node_count - 1 - b.degree(anchor) - blocked

    def pick_host(self, needed: int) -> int:
        """Preferential pick of a host with room for ``needed`` interior links.

        A host already linked to (almost) every node, such as the hub of the
        star seed graph in the first steps, is redrawn.
        """
        for _ in range(MAX_PREFERENTIAL_TRIES):
            h = self.weights.sample(self.rng)
            if self.free_peers(h, ()) >= needed:
                return h
        eligible = [
            h for h in range(self.b.node_count)
            if self.weights[h] > 0 and self.free_peers(h, ()) >= needed
        ]
        if not eligible:
            raise ParameterError("no node can host a new node's interior links")
        return self.weights.sample_among(eligible, self.rng)

    def pick_host_pair(self) -> tuple[int, int]:
        """Two distinct preferential hosts; the first needs one free peer."""
        for _ in range(MAX_PREFERENTIAL_TRIES):
            h1 = self.pick_host(1)
            h2 = self.weights.sample(self.rng)
            if h2 != h1 and self.free_peers(h1, (h2,)) >= 1:
                return h1, h2
        h1 = self.pick_host(2)
        others = [h for h in range(self.b.node_count) if h != h1 and self.weights[h] > 0]
        return h1, self.weights.sample_among(others, self.rng)

    def pick_peer(self, anchor: int, exclude: tuple[int, ...]) -> int:
        """Preferential pick of a node that is not ``anchor``, not in
        ``exclude`` and not yet linked to ``anchor``."""
        b, rng = self.b, self.rng
        for _ in range(MAX_PREFERENTIAL_TRIES):
            c = self.weights.sample(rng)
            if c != anchor and c not in exclude and not b.has_edge(anchor, c):
                return c
        nbrs = b.neighbors(anchor)
        candidates = [
            c for c in range(b.node_count)
            if c != anchor and c not in exclude and c not in nbrs
        ]
        if not candidates:
            raise ParameterError(f"node {anchor} is already linked to every candidate peer")
        return candidates[rng.randrange(len(candidates))]


def grow_ig(params: IgParams, seed: int) -> Iterator[tuple[int, GraphBuilder]]:
    """Yield ``(new_node, builder)`` after each IG growth step.

    The builder reflects the state right after the step, so the new node's
    degree is 1 after a one-host step and 2 after a two-host step.
    """
    params.validate()
    st = _IgState(params, seed)
    b, rng = st.b, st.rng

    for _ in range(params.n_target - b.node_count):
        if rng.random() < params.p_one_host:
            host = st.pick_host(2)
            new = b.add_node()
            st.link(new, host)
            first = st.pick_peer(host, ())
            st.link(host, first)
            st.link(host, st.pick_peer(host, (first,)))
        else:
            h1, h2 = st.pick_host_pair()
            new = b.add_node()
            st.link(new, h1)
            st.link(new, h2)
            st.link(h1, st.pick_peer(h1, (h2,)))
        yield new, b


def generate_ig(params: IgParams, seed: int) -> Graph:
    b = None
    for _, b in grow_ig(params, seed):
        pass
    return b.freeze()
