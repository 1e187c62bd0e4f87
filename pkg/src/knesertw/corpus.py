"""Named test graphs shared by the test-suite and the scripts."""

from __future__ import annotations

from .combinatorics import binom
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    random_graph,
    random_tree,
)
from .kneser import KneserParams, build_graph, validate_params


def kneser_params(max_vertices: int, max_n: int = 200) -> list[KneserParams]:
    """Every valid (n, k, t) with C(n, k) <= max_vertices, sorted."""
    out = []
    for n in range(3, max_n + 1):
        for k in range(2, n):
            if binom(n, k) > max_vertices:
                continue
            for t in range(1, k):
                if n > 2 * k - t:
                    out.append(validate_params(n, k, t))
    return out


def graph_corpus(max_vertices: int = 20) -> dict[str, Graph]:
    """Kneser graphs plus standard families, all with at most ``max_vertices``."""
    out: dict[str, Graph] = {}
    for p in kneser_params(max_vertices):
        out[str(p)] = build_graph(p).graph
    for m in range(1, 11):
        out[f"K_{m}"] = complete_graph(m)
    for m in (2, 5, 9, 14):
        out[f"P_{m}"] = path_graph(m)
    for m in (3, 6, 11):
        out[f"C_{m}"] = cycle_graph(m)
    out["grid_3x3"] = grid_graph(3, 3)
    out["grid_4x4"] = grid_graph(4, 4)
    for seed in range(4):
        out[f"tree_{seed}"] = random_tree(8 + 3 * seed, seed)
    for seed in range(6):
        out[f"gnp_{seed}"] = random_graph(8 + seed, 0.35, seed)
    return {name: g for name, g in out.items() if g.n <= max_vertices}
