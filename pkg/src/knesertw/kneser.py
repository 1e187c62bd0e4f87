"""Generalized Kneser graphs K(n, k, t).

Vertices are colex ranks of the k-subsets of [n]; two vertices are adjacent
iff their subsets share fewer than ``t`` elements.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .combinatorics import KSubset, binom, colex_rank, colex_unrank, iter_ksubsets
from .graph import Graph, bits, popcount

DEFAULT_MAX_VERTICES = 4096
DEFAULT_ALPHA_CAP = 40


class InvalidParams(ValueError):
    """Raised for (n, k, t) outside k > t > 0, n > 2k - t."""

    def __init__(self, n, k, t, constraint):
        self.n, self.k, self.t = n, k, t
        self.constraint = constraint
        super().__init__(f"invalid K({n},{k},{t}): violates {constraint}")


class CapExceeded(RuntimeError):
    pass


def max_vertices_cap() -> int:
    """Materialization cap, overridable through ``KNESERTW_MAX_VERTICES``."""
    env = os.environ.get("KNESERTW_MAX_VERTICES")
    return int(env) if env else DEFAULT_MAX_VERTICES


@dataclass(frozen=True)
class KneserParams:
    n: int
    k: int
    t: int

    @property
    def num_vertices(self) -> int:
        return binom(self.n, self.k)

    @property
    def wilson_range(self) -> bool:
        """n >= (t+1)(k+1-t), where pencils are maximum independent sets."""
        return self.n >= (self.t + 1) * (self.k + 1 - self.t)

    def __str__(self):
        return f"K({self.n},{self.k},{self.t})"


def validate_params(n: int, k: int, t: int) -> KneserParams:
    if t <= 0:
        raise InvalidParams(n, k, t, "t > 0")
    if k <= t:
        raise InvalidParams(n, k, t, "k > t")
    if n <= 2 * k - t:
        raise InvalidParams(n, k, t, "n > 2k - t")
    return KneserParams(n, k, t)


def is_adjacent(u: KSubset | Sequence[int], v: KSubset | Sequence[int], t: int) -> bool:
    """True iff ``|u & v| < t``."""
    return len(set(u) & set(v)) < t


def max_degree_formula(params: KneserParams) -> int:
    """Common degree: sum over i < t of C(k, i) C(n-k, k-i)."""
    n, k, t = params.n, params.k, params.t
    return sum(binom(k, i) * binom(n - k, k - i) for i in range(t))


@dataclass(frozen=True)
class KneserGraph:
    """K(n, k, t) with an on-demand adjacency oracle.

    ``adj`` (neighbour bitmasks) is only built when the vertex count is at
    most ``cap``; everything else works from colex unranking.
    """

    params: KneserParams
    cap: int = field(default_factory=max_vertices_cap)

    @property
    def n(self) -> int:
        return self.params.num_vertices

    @property
    def materializable(self) -> bool:
        return self.n <= self.cap

    def subset(self, v: int) -> KSubset:
        return colex_unrank(v, self.params.k, self.params.n)

    def rank(self, s: KSubset | Sequence[int]) -> int:
        return colex_rank(s, self.params.n)

    @cached_property
    def _masks(self) -> tuple[int, ...]:
        out = []
        for s in iter_ksubsets(self.params.n, self.params.k):
            m = 0
            for e in s:
                m |= 1 << (e - 1)
            out.append(m)
        return tuple(out)

    def _mask(self, v: int) -> int:
        if self.materializable:
            return self._masks[v]
        return self.subset(v).mask

    def adjacent(self, u: int, v: int) -> bool:
        return popcount(self._mask(u) & self._mask(v)) < self.params.t

    @cached_property
    def adj(self) -> tuple[int, ...]:
        if not self.materializable:
            raise CapExceeded(
                f"{self.params} has {self.n} vertices, above the cap of {self.cap}"
            )
        masks = self._masks
        t = self.params.t
        adj = [0] * len(masks)
        for u, mu in enumerate(masks):
            row = 0
            for v in range(u + 1, len(masks)):
                if popcount(mu & masks[v]) < t:
                    row |= 1 << v
                    adj[v] |= 1 << u
            adj[u] |= row
        return tuple(adj)

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.n, self.adj)

    def neighbors(self, v: int) -> list[int]:
        if self.materializable:
            return list(bits(self.adj[v]))
        return [u for u in range(self.n) if u != v and self.adjacent(u, v)]

    def degree(self, v: int) -> int:
        if self.materializable:
            return popcount(self.adj[v])
        return len(self.neighbors(v))

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def is_independent(self, vertices) -> bool:
        vs = sorted(vertices)
        return not any(
            self.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]
        )


def build_graph(params: KneserParams, cap: int | None = None) -> KneserGraph:
    """Build K(n, k, t); adjacency is materialized lazily below ``cap``."""
    return KneserGraph(params, cap if cap is not None else max_vertices_cap())


def pencil_independent_set(params: KneserParams, base: Sequence[int]) -> tuple[int, ...]:
    """Ranks of all k-subsets containing the t-set ``base`` (a point pencil)."""
    base = sorted(set(base))
    if len(base) != params.t:
        raise ValueError(f"pencil base must have exactly t={params.t} elements, got {base}")
    if base[0] < 1 or base[-1] > params.n:
        raise ValueError(f"pencil base must lie in [1, {params.n}]")
    rest = [e for e in range(1, params.n + 1) if e not in base]
    out = []
    for extra in iter_ksubsets(len(rest), params.k - params.t):
        s = sorted(base + [rest[i - 1] for i in extra])
        out.append(colex_rank(s, params.n))
    return tuple(sorted(out))


def crowded_set_size(params: KneserParams) -> int:
    """|{K : |K & [t+2]| >= t+1}| in closed form."""
    n, k, t = params.n, params.k, params.t
    return sum(binom(t + 2, j) * binom(n - t - 2, k - j) for j in range(t + 1, min(k, t + 2) + 1))


def crowded_independent_set(params: KneserParams) -> tuple[int, ...]:
    """All k-subsets with at least t+1 elements inside [t+2].

    Any two such subsets meet in at least t elements of [t+2], so the family
    is independent; below n = (t+1)(k+1-t) it beats every pencil.
    """
    n, k, t = params.n, params.k, params.t
    if t + 2 > n:
        raise ValueError(f"crowded set needs t + 2 <= n, got t={t}, n={n}")
    core = (1 << (t + 2)) - 1
    out = []
    for r, s in enumerate(iter_ksubsets(n, k)):
        m = 0
        for e in s:
            m |= 1 << (e - 1)
        if popcount(m & core) >= t + 1:
            out.append(r)
    return tuple(out)


def brute_force_alpha(graph, cap: int = DEFAULT_ALPHA_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with a deterministic witness.

    Branch and bound over vertices in increasing order (include first),
    pruned by a greedy clique cover of the remaining candidates. The witness
    is the lexicographically smallest maximum independent set.
    """
    n = graph.n
    if n > cap:
        raise CapExceeded(f"brute_force_alpha limited to {cap} vertices, graph has {n}")
    adj = graph.adj
    best_size = -1
    best_set: tuple[int, ...] = ()

    def cover_bound(p: int) -> int:
        # each clique of G contributes at most one vertex to an independent set
        count = 0
        while p:
            low = p & -p
            v = low.bit_length() - 1
            clique_cand = adj[v] & p
            p ^= low
            while clique_cand:
                w_low = clique_cand & -clique_cand
                w = w_low.bit_length() - 1
                p &= ~w_low
                clique_cand &= adj[w]
            count += 1
        return count

    def search(chosen: list[int], p: int):
        nonlocal best_size, best_set
        if not p:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_set = tuple(chosen)
            return
        if len(chosen) + cover_bound(p) <= best_size:
            return
        low = p & -p
        v = low.bit_length() - 1
        chosen.append(v)
        search(chosen, p & ~low & ~adj[v])
        chosen.pop()
        search(chosen, p & ~low)

    search([], (1 << n) - 1)
    return best_size, best_set
