"""Immutable simple undirected graphs over dense integer node ids."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised when a graph cannot be constructed from the given input."""


@dataclass(frozen=True)
class BuildStats:
    duplicates_dropped: int = 0
    self_loops_dropped: int = 0


class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Node ids are ``0 .. n_nodes - 1``. Instances are never mutated after
    construction, so they can be shared freely between threads.
    """

    __slots__ = ("_adj", "_edge_count", "_neighbor_sets")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        self._adj = tuple(tuple(nbrs) for nbrs in adjacency)
        self._edge_count = sum(len(nbrs) for nbrs in self._adj) // 2
        self._neighbor_sets = None

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"Graph(N={self.node_count}, L={self.edge_count})"

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def neighbor_set(self, u: int) -> frozenset[int]:
        if self._neighbor_sets is None:
            self._neighbor_sets = tuple(frozenset(nbrs) for nbrs in self._adj)
        return self._neighbor_sets[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs[bisect_left(nbrs, u + 1):]:
                yield u, v

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` if the graph is not simple and symmetric."""
        total = 0
        for u, nbrs in enumerate(self._adj):
            total += len(nbrs)
            for a, b in zip(nbrs, nbrs[1:]):
                assert a < b, f"adjacency of {u} not strictly increasing"
            for v in nbrs:
                assert v != u, f"self-loop at {u}"
                assert 0 <= v < len(self._adj), f"neighbor {v} of {u} out of range"
                assert self.has_edge(v, u), f"edge ({u}, {v}) not symmetric"
        assert total == 2 * self._edge_count


class GraphBuilder:
    """Mutable accumulator of edges; ``freeze`` produces a :class:`Graph`."""

    def __init__(self, n_nodes: int = 0):
        self._nbrs: list[set[int]] = [set() for _ in range(n_nodes)]
        self.edge_count = 0
        self.duplicates_dropped = 0
        self.self_loops_dropped = 0

    @property
    def node_count(self) -> int:
        return len(self._nbrs)

    def add_node(self) -> int:
        self._nbrs.append(set())
        return len(self._nbrs) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    def neighbors(self, u: int) -> set[int]:
        return self._nbrs[u]

    def add_edge(self, u: int, v: int) -> bool:
        """Add ``u -- v``; return False (and count it) for loops and repeats."""
        n = len(self._nbrs)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a node outside [0, {n})")
        if u == v:
            self.self_loops_dropped += 1
            return False
        if v in self._nbrs[u]:
            self.duplicates_dropped += 1
            return False
        self._nbrs[u].add(v)
        self._nbrs[v].add(u)
        self.edge_count += 1
        return True

    def freeze(self) -> Graph:
        return Graph([sorted(s) for s in self._nbrs])


def build_graph(
    n_nodes: int, edges: Iterable[tuple[int, int]]
) -> tuple[Graph, BuildStats]:
    """Build a simple graph, dropping self-loops and repeated pairs.

    Raises :class:`GraphError` naming the first pair with an id outside
    ``[0, n_nodes)``.
    """
    builder = GraphBuilder(n_nodes)
    for index, (u, v) in enumerate(edges):
        if not (0 <= u < n_nodes and 0 <= v < n_nodes):
            raise GraphError(
                f"edge #{index} ({u}, {v}) references a node outside [0, {n_nodes})"
            )
        builder.add_edge(u, v)
    stats = BuildStats(builder.duplicates_dropped, builder.self_loops_dropped)
    return builder.freeze(), stats


class DisjointSet:
    """Union-find over ``0 .. n-1`` with union by size and path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


def component_labels(g: Graph, excluded: Iterable[int] = ()) -> list[int]:
    """Label each surviving node with its component root; excluded nodes get -1."""
    n = g.node_count
    alive = [True] * n
    for u in excluded:
        alive[u] = False
    ds = DisjointSet(n)
    for u, v in g.edges():
        if alive[u] and alive[v]:
            ds.union(u, v)
    return [ds.find(u) if alive[u] else -1 for u in range(n)]


def largest_component(g: Graph, excluded: Iterable[int] = ()) -> int:
    """Size of the largest connected component after removing ``excluded``.

    Returns 0 when every node is excluded.
    """
    n = g.node_count
    alive = bytearray([1]) * n
    for u in excluded:
        alive[u] = 0
    ds = DisjointSet(n)
    adj = g._adj
    for u in range(n):
        if not alive[u]:
            continue
        for v in adj[u]:
            if v > u and alive[v]:
                ds.union(u, v)
    best = 0
    for u in range(n):
        if alive[u] and ds.parent[u] == u and ds.size[u] > best:
            best = ds.size[u]
    return best

