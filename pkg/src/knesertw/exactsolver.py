"""Exact treewidth, treewidth bounds and balanced separators for small graphs.

Two independent exact methods are provided so that each can serve as an
oracle for the other:

* ``subset-dp``: the elimination-ordering recurrence over vertex subsets,
  run as a decision procedure "is tw <= k" with layers of feasible
  prefixes, tightened downward from a heuristic upper bound;
* ``branch-and-bound``: depth-first search over elimination prefixes with a
  min-fill incumbent, minor-min-width pruning, simplicial reductions and
  memoisation on the eliminated set.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graph import bits, popcount
from .tdecomp import TreeDecomposition, validate_decomposition

SUBSET_DP = "subset-dp"
BRANCH_AND_BOUND = "branch-and-bound"
SEPARATOR_CAP = 20


class SolverTimeout(Exception):
    pass


@dataclass(frozen=True)
class SolverLimits:
    method: str = "auto"  # "auto" | SUBSET_DP | BRANCH_AND_BOUND
    time_limit: float | None = None
    dp_cap: int = 26
    bb_cap: int = 34


@dataclass
class SolveResult:
    treewidth: int | None
    certificate: TreeDecomposition
    method: str
    exact: bool
    lower: int
    upper: int
    ordering: tuple[int, ...] = ()
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SeparatorResult:
    separator: tuple[int, ...]
    p: Fraction
    is_minimum: bool


class _Clock:
    def __init__(self, limit):
        self.start = time.perf_counter()
        self.deadline = None if limit is None else self.start + limit

    def check(self):
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise SolverTimeout

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


# -- elimination orderings -------------------------------------------------

def ordering_width(graph, order: Sequence[int]) -> int:
    """Max number of later neighbours in the fill-in graph."""
    adj = list(graph.adj)
    width = -1 if graph.n == 0 else 0
    alive = (1 << graph.n) - 1
    for v in order:
        nb = adj[v] & alive & ~(1 << v)
        width = max(width, popcount(nb))
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
    return width


def decomposition_from_ordering(graph, order: Sequence[int]) -> TreeDecomposition:
    """Standard bag construction: bag(v) = {v} + later neighbours in the fill graph.

    Each bag hangs off the bag of its earliest-eliminated later neighbour;
    forest roots are chained so the result is a single tree.
    """
    n = graph.n
    if n == 0:
        return TreeDecomposition(((),), ())
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(n)):
        raise ValueError("ordering must be a permutation of the vertices")
    adj = list(graph.adj)
    alive = (1 << n) - 1
    bags = []
    parents = []
    for v in order:
        nb = adj[v] & alive & ~(1 << v)
        bags.append(tuple([v] + list(bits(nb))))
        parents.append(min(bits(nb), key=pos.__getitem__) if nb else None)
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
    edges = []
    roots = []
    for i, par in enumerate(parents):
        if par is None:
            roots.append(i)
        else:
            edges.append((i, pos[par]))
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(tuple(bags), tuple(edges))


# -- bounds ----------------------------------------------------------------

def degeneracy(graph) -> int:
    """Maximum over the min-degree deletion sequence of the minimum degree."""
    adj = list(graph.adj)
    alive = (1 << graph.n) - 1
    best = 0
    while alive:
        v = min(bits(alive), key=lambda x: (popcount(adj[x] & alive), x))
        best = max(best, popcount(adj[v] & alive))
        alive &= ~(1 << v)
    return best


def minor_min_width(graph) -> int:
    """Contract a min-degree vertex into its min-degree neighbour, repeatedly.

    The largest minimum degree seen is a treewidth lower bound since
    treewidth is minor-monotone.
    """
    adj = list(graph.adj)
    alive = (1 << graph.n) - 1
    best = 0
    while alive:
        v = min(bits(alive), key=lambda x: (popcount(adj[x] & alive), x))
        nb = adj[v] & alive
        best = max(best, popcount(nb))
        if nb:
            u = min(bits(nb), key=lambda x: (popcount(adj[x] & alive), x))
            merged = (adj[u] | nb) & ~(1 << u) & ~(1 << v)
            adj[u] = merged
            for w in bits(merged):
                adj[w] |= 1 << u
        alive &= ~(1 << v)
    return best


def treewidth_lower_bound(graph) -> int:
    return max(degeneracy(graph), minor_min_width(graph))


def greedy_upper_bound(graph, heuristic: str = "min-fill") -> tuple[int, tuple[int, ...]]:
    """Greedy elimination by min-degree or min-fill, ties to the smallest vertex."""
    if heuristic not in ("min-degree", "min-fill"):
        raise ValueError(f"unknown heuristic {heuristic!r}")
    adj = list(graph.adj)
    alive = (1 << graph.n) - 1
    order = []

    def fill(x):
        nb = adj[x] & alive
        missing = 0
        for u in bits(nb):
            missing += popcount(nb & ~adj[u] & ~(1 << u))
        return missing // 2

    while alive:
        if heuristic == "min-degree":
            v = min(bits(alive), key=lambda x: (popcount(adj[x] & alive), x))
        else:
            v = min(bits(alive), key=lambda x: (fill(x), popcount(adj[x] & alive), x))
        nb = adj[v] & alive
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
        order.append(v)
    return ordering_width(graph, order), tuple(order)


def _best_greedy(graph) -> tuple[int, tuple[int, ...]]:
    a = greedy_upper_bound(graph, "min-fill")
    b = greedy_upper_bound(graph, "min-degree")
    return a if a[0] <= b[0] else b


# -- subset DP ---------------------------------------------------------------

def _q_value(adj, s: int, v: int) -> int:
    """Later-neighbour count of v when eliminated right after the set s."""
    inside = s | (1 << v)
    comp = 1 << v
    frontier = comp
    nb = 0
    while frontier:
        reach = 0
        for x in bits(frontier):
            reach |= adj[x]
        nb |= reach
        frontier = reach & s & ~comp
        comp |= frontier
    return popcount(nb & ~inside)


def _dp_decide(graph, k: int, clock: _Clock, stats: dict) -> list[int] | None:
    """An ordering of width <= k, or None if none exists."""
    n = graph.n
    if k >= n - 1:
        return list(range(n))
    adj = graph.adj
    layer = {0: None}
    history = [layer]
    while True:
        size = popcount(next(iter(layer)))
        if n - size <= k + 1:
            s = next(iter(layer))
            prefix = []
            for lvl in range(len(history) - 1, 0, -1):
                prev, v = history[lvl][s]
                prefix.append(v)
                s = prev
            prefix.reverse()
            done = set(prefix)
            return prefix + [v for v in range(n) if v not in done]
        nxt = {}
        for s in layer:
            clock.check()
            for v in bits(~s & ((1 << n) - 1)):
                t = s | (1 << v)
                if t in nxt:
                    continue
                stats["nodes"] = stats.get("nodes", 0) + 1
                if _q_value(adj, s, v) <= k:
                    nxt[t] = (s, v)
        if not nxt:
            return None
        layer = nxt
        history.append(layer)


def _solve_dp(graph, clock, stats, lb, ub, order):
    best_order = list(order)
    k = ub - 1
    while k >= lb:
        found = _dp_decide(graph, k, clock, stats)
        if found is None:
            break
        best_order = found
        ub = ordering_width(graph, found)
        k = ub - 1
    return ub, best_order


# -- branch and bound --------------------------------------------------------

def _solve_bb(graph, clock, stats, lb, ub, order):
    n = graph.n
    best = {"width": ub, "order": list(order)}
    memo: dict[int, int] = {}

    def eliminate(adj, alive, v):
        nb = adj[v] & alive
        new = list(adj)
        for u in bits(nb):
            new[u] |= nb & ~(1 << u)
        return new, alive & ~(1 << v)

    def sub_lb(adj, alive):
        # minor-min-width on the remaining filled graph
        idx = list(bits(alive))
        pos = {v: i for i, v in enumerate(idx)}
        sub = []
        for v in idx:
            m = 0
            for u in bits(adj[v] & alive):
                m |= 1 << pos[u]
            sub.append(m)

        class _G:
            pass

        g = _G()
        g.n, g.adj = len(idx), sub
        return minor_min_width(g)

    def search(adj, alive, prefix, cur):
        clock.check()
        stats["nodes"] = stats.get("nodes", 0) + 1
        remaining = popcount(alive)
        if remaining - 1 <= cur:
            # any completion costs at most cur
            if cur < best["width"]:
                best["width"] = cur
                best["order"] = prefix + list(bits(alive))
            return
        eliminated = ((1 << n) - 1) & ~alive
        seen = memo.get(eliminated)
        if seen is not None and seen <= cur:
            return
        memo[eliminated] = cur
        low = max(cur, sub_lb(adj, alive))
        if low >= best["width"]:
            return
        # safe reductions: simplicial, or almost simplicial of degree <= low
        for v in bits(alive):
            nb = adj[v] & alive
            deg = popcount(nb)
            if deg > low:
                continue
            non_clique = [u for u in bits(nb) if (nb & ~adj[u] & ~(1 << u))]
            simplicial = not non_clique
            almost = False
            if not simplicial:
                for u in bits(nb):
                    rest = nb & ~(1 << u)
                    if all(not (rest & ~adj[w] & ~(1 << w)) for w in bits(rest)):
                        almost = True
                        break
            if simplicial or almost:
                new, na = eliminate(adj, alive, v)
                search(new, na, prefix + [v], max(cur, deg))
                return
        for v in bits(alive):
            deg = popcount(adj[v] & alive)
            if max(cur, deg) >= best["width"]:
                continue
            new, na = eliminate(adj, alive, v)
            search(new, na, prefix + [v], max(cur, deg))
            if best["width"] <= low:
                return

    if lb < ub:
        search(list(graph.adj), (1 << n) - 1, [], 0)
    return best["width"], best["order"]


# -- public entry point ------------------------------------------------------

def exact_treewidth(graph, limits: SolverLimits = SolverLimits()) -> SolveResult:
    """Exact treewidth with a validated tree-decomposition certificate.

    On timeout the result carries ``exact=False`` and the bracketing
    ``[lower, upper]`` with a certificate of width ``upper``.
    """
    n = graph.n
    method = limits.method
    if method == "auto":
        method = SUBSET_DP if n <= limits.dp_cap else BRANCH_AND_BOUND
    if method == SUBSET_DP and n > limits.dp_cap:
        raise ValueError(f"subset-dp limited to {limits.dp_cap} vertices, graph has {n}")
    if method == BRANCH_AND_BOUND and n > limits.bb_cap:
        raise ValueError(f"branch-and-bound limited to {limits.bb_cap} vertices, graph has {n}")
    if method not in (SUBSET_DP, BRANCH_AND_BOUND):
        raise ValueError(f"unknown method {method!r}")

    clock = _Clock(limits.time_limit)
    stats: dict = {"nodes": 0}
    lb = treewidth_lower_bound(graph) if n else -1
    ub, order = _best_greedy(graph) if n else (-1, ())
    stats["initial_lower"] = lb
    stats["initial_upper"] = ub
    exact = True
    try:
        if method == SUBSET_DP:
            ub, order = _solve_dp(graph, clock, stats, lb, ub, order)
        else:
            ub, order = _solve_bb(graph, clock, stats, lb, ub, order)
    except SolverTimeout:
        exact = False
    order = tuple(order)
    cert = decomposition_from_ordering(graph, order)
    report = validate_decomposition(graph, cert)
    if report.violations or report.width != ub:
        raise AssertionError(f"certificate failed validation: {report}")
    stats["elapsed"] = clock.elapsed
    return SolveResult(
        treewidth=ub if exact else None,
        certificate=cert,
        method=method,
        exact=exact,
        lower=ub if exact else lb,
        upper=ub,
        ordering=order,
        stats=stats,
    )


# -- separators --------------------------------------------------------------

def _check_p(p) -> Fraction:
    p = Fraction(p)
    if not Fraction(2, 3) <= p < 1:
        raise ValueError(f"p must satisfy 2/3 <= p < 1, got {p}")
    return p


def _largest_component_ok(adj, rest: int, limit: Fraction) -> bool:
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        size = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & rest & ~comp
            comp |= frontier
            size += popcount(frontier)
            if size > limit:
                return False
        rest &= ~comp
    return True


def is_p_separator(graph, separator, p) -> bool:
    """Every component of G - X has at most p |V - X| vertices."""
    p = _check_p(p)
    x = 0
    for v in separator:
        x |= 1 << v
    rest = ((1 << graph.n) - 1) & ~x
    return _largest_component_ok(graph.adj, rest, p * popcount(rest))


def min_balanced_separator(graph, p=Fraction(2, 3), cap: int = SEPARATOR_CAP) -> SeparatorResult:
    """Minimum-cardinality p-separator by exhaustive search over sizes."""
    p = _check_p(p)
    n = graph.n
    if n > cap:
        raise ValueError(f"separator search limited to {cap} vertices, graph has {n}")
    adj = graph.adj
    full = (1 << n) - 1
    for size in range(n + 1):
        limit = p * (n - size)
        for combo in itertools.combinations(range(n), size):
            x = 0
            for v in combo:
                x |= 1 << v
            if _largest_component_ok(adj, full & ~x, limit):
                return SeparatorResult(combo, p, True)
    raise AssertionError("V itself is always a p-separator")
