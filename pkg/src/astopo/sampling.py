"""Dynamic weighted sampling backed by a binary sum tree."""

from __future__ import annotations

import random
from bisect import bisect_right
from typing import Iterable


class SumTree:
    """Weights over ids ``0 .. n-1`` with O(log n) update and draw.

    Internal nodes are recomputed as ``left + right`` on every update rather
    than adjusted by deltas, so float weights never accumulate drift and a
    draw can never land on a zero-weight leaf.

    >>> t = SumTree([1, 0, 3])
    >>> t.total
    4
    >>> t.find(0.5), t.find(1.0), t.find(3.9)
    (0, 2, 2)
    """

    def __init__(self, weights: Iterable[float] = ()):
        weights = list(weights)
        self._n = len(weights)
        cap = 1
        while cap < max(self._n, 1):
            cap *= 2
        self._cap = cap
        self._tree = [0] * (2 * cap)
        for i, w in enumerate(weights):
            if w < 0:
                raise ValueError(f"weight of {i} is negative: {w}")
            self._tree[cap + i] = w
        for i in range(cap - 1, 0, -1):
            self._tree[i] = self._tree[2 * i] + self._tree[2 * i + 1]

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> float:
        if not 0 <= i < self._n:
            raise IndexError(i)
        return self._tree[self._cap + i]

    def __setitem__(self, i: int, w: float) -> None:
        if not 0 <= i < self._n:
            raise IndexError(i)
        if w < 0:
            raise ValueError(f"weight of {i} is negative: {w}")
        tree = self._tree
        j = self._cap + i
        tree[j] = w
        j //= 2
        while j:
            tree[j] = tree[2 * j] + tree[2 * j + 1]
            j //= 2

    @property
    def total(self) -> float:
        return self._tree[1]

    def append(self, w: float = 0) -> int:
        if self._n == self._cap:
            self._grow()
        self._n += 1
        self[self._n - 1] = w
        return self._n - 1

    def _grow(self) -> None:
        leaves = self._tree[self._cap:self._cap + self._n]
        self._cap *= 2
        self._tree = [0] * (2 * self._cap)
        self._tree[self._cap:self._cap + self._n] = leaves
        for i in range(self._cap - 1, 0, -1):
            self._tree[i] = self._tree[2 * i] + self._tree[2 * i + 1]

    def find(self, u: float) -> int:
        """Return the id whose cumulative-weight interval contains ``u``."""
        tree = self._tree
        j = 1
        cap = self._cap
        while j < cap:
            left = tree[2 * j]
            if u < left or tree[2 * j + 1] == 0:
                j = 2 * j
            else:
                u -= left
                j = 2 * j + 1
        return j - cap

    def sample(self, rng: random.Random) -> int:
        """Draw an id with probability proportional to its weight."""
        total = self._tree[1]
        if not total > 0:
            raise ValueError("cannot sample: all weights are zero")
        return self.find(rng.random() * total)

    def sample_among(self, ids: list[int], rng: random.Random) -> int:
        """Draw from ``ids`` only, proportionally to their current weights."""
        acc = []
        total = 0
        for i in ids:
            total += self[i]
            acc.append(total)
        if not total > 0:
            raise ValueError("cannot sample: all weights are zero")
        u = rng.random() * total
        return ids[min(bisect_right(acc, u), len(ids) - 1)]


def sample_weighted(weights: SumTree, rng: random.Random) -> int:
    return weights.sample(rng)
