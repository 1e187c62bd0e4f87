"""Small undirected graphs as tuples of neighbour bitmasks.

Vertices are ``0..n-1``; ``adj[v]`` has bit ``u`` set iff ``{u, v}`` is an
edge. This is the representation every solver in the package works on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(m):
                if u >= self.n or not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {{{u}, {v}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u}, {v}}} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((popcount(m) for m in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``mask``."""
        if mask is None:
            mask = self.all_mask
        adj = self.adj
        out = []
        while mask:
            seed = mask & -mask
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & mask & ~comp
                comp |= frontier
            out.append(comp)
            mask &= ~comp
        return out

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = 0
        for v in vertices:
            m |= 1 << v
        return all(not (self.adj[v] & m) for v in bits(m))


def as_graph(g) -> Graph:
    """Accept a :class:`Graph` or anything exposing ``n`` and ``adj``."""
    if isinstance(g, Graph):
        return g
    return Graph(g.n, tuple(g.adj))


def complete_graph(m: int) -> Graph:
    full = (1 << m) - 1
    return Graph(m, tuple(full & ~(1 << v) for v in range(m)))


def path_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def random_tree(m: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(m, [(rng.randrange(v), v) for v in range(1, m)])


def random_graph(m: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        m, [(u, v) for u in range(m) for v in range(u + 1, m) if rng.random() < p]
    )
