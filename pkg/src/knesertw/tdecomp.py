"""Tree decompositions: validation, width, and the star construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .combinatorics import binom
from .graph import bits
from .kneser import KneserParams


@dataclass(frozen=True)
class TreeDecomposition:
    """Nodes ``0..len(bags)-1``; ``bags[i]`` is a sorted tuple of vertices."""

    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(tuple(sorted(set(b))) for b in self.bags))
        object.__setattr__(
            self,
            "tree_edges",
            tuple(sorted((min(i, j), max(i, j)) for i, j in self.tree_edges)),
        )

    @classmethod
    def from_mapping(cls, bags: Mapping[int, Iterable[int]], tree_edges) -> "TreeDecomposition":
        """Build from arbitrary node ids, relabelled to 0.. in sorted order."""
        ids = sorted(bags)
        index = {node: i for i, node in enumerate(ids)}
        return cls(
            tuple(tuple(bags[node]) for node in ids),
            tuple((index[a], index[b]) for a, b in tree_edges),
        )

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class Violation:
    kind: str  # "structure" | "uncovered edge" | "disconnected trace" | "missing vertex" | "bad vertex"
    detail: tuple

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass
class WidthReport:
    width: int
    largest_bag_node: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def _tree_structure_violations(td: TreeDecomposition) -> list[Violation]:
    m = td.num_nodes
    if m == 0:
        return [Violation("structure", ("no nodes",))]
    out = []
    seen = set()
    for i, j in td.tree_edges:
        if not (0 <= i < m and 0 <= j < m):
            out.append(Violation("structure", ("edge out of range", i, j)))
        elif i == j:
            out.append(Violation("structure", ("loop", i)))
        elif (i, j) in seen:
            out.append(Violation("structure", ("duplicate edge", i, j)))
        seen.add((i, j))
    if out:
        return out
    if len(seen) != m - 1:
        out.append(Violation("structure", ("edge count", len(seen), m - 1)))
    # connectivity via union-find; with m-1 edges this also rules out cycles
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in seen:
        ri, rj = find(i), find(j)
        if ri == rj:
            out.append(Violation("structure", ("cycle through", i, j)))
        parent[ri] = rj
    roots = {find(x) for x in range(m)}
    if len(roots) > 1:
        out.append(Violation("structure", ("disconnected tree", len(roots))))
    return out


def validate_decomposition(graph, td: TreeDecomposition) -> WidthReport:
    """Check both tree-decomposition conditions against ``graph``.

    Structural problems with the tree itself are reported first and stop the
    semantic checks.
    """
    sizes = [len(b) for b in td.bags]
    largest = max(range(len(sizes)), key=lambda i: (sizes[i], -i)) if sizes else -1
    report = WidthReport(width=(sizes[largest] - 1) if sizes else -1, largest_bag_node=largest)
    report.violations.extend(_tree_structure_violations(td))
    if report.violations:
        return report

    n = graph.n
    occurs: list[list[int]] = [[] for _ in range(n)]
    bag_masks = []
    for node, bag in enumerate(td.bags):
        m = 0
        for v in bag:
            if not 0 <= v < n:
                report.violations.append(Violation("bad vertex", (node, v)))
                continue
            occurs[v].append(node)
            m |= 1 << v
        bag_masks.append(m)

    for v in range(n):
        if not occurs[v]:
            report.violations.append(Violation("missing vertex", (v,)))

    tree_adj: list[list[int]] = [[] for _ in range(td.num_nodes)]
    for i, j in td.tree_edges:
        tree_adj[i].append(j)
        tree_adj[j].append(i)
    for v in range(n):
        nodes = occurs[v]
        if len(nodes) < 2:
            continue
        allowed = set(nodes)
        stack = [nodes[0]]
        reached = {nodes[0]}
        while stack:
            x = stack.pop()
            for y in tree_adj[x]:
                if y in allowed and y not in reached:
                    reached.add(y)
                    stack.append(y)
        if len(reached) != len(allowed):
            report.violations.append(Violation("disconnected trace", (v,)))

    adj = graph.adj
    for u in range(n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            pair = (1 << u) | (1 << v)
            if not any(bm & pair == pair for bm in bag_masks):
                report.violations.append(Violation("uncovered edge", (u, v)))
    return report


def star_decomposition(graph, indep) -> TreeDecomposition:
    """Star with centre bag V \\ A and a leaf {a} + N(a) per a in A.

    Node 0 is the centre; leaves follow in increasing vertex order.
    """
    indep = sorted(set(indep))
    if not graph.is_independent(indep):
        raise ValueError("star_decomposition needs an independent set")
    in_a = set(indep)
    centre = tuple(v for v in range(graph.n) if v not in in_a)
    if not indep:
        return TreeDecomposition((centre,), ())
    bags = [centre]
    for a in indep:
        bags.append(tuple([a] + graph.neighbors(a)))
    return TreeDecomposition(tuple(bags), tuple((0, i) for i in range(1, len(bags))))


def upper_bound_formula(params: KneserParams) -> int:
    """C(n,k) - C(n-t,k-t) - 1, the width of the pencil star decomposition."""
    return binom(params.n, params.k) - binom(params.n - params.t, params.k - params.t) - 1


def upper_bound_not_tight(params: KneserParams) -> bool:
    """True below n = (t+1)(k+1-t), where a crowded family beats every pencil."""
    return not params.wilson_range
