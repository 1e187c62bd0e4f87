"""Exact treewidth of small generalized Kneser graphs against the upper bound.

At n = (t+1)(k+1-t) the upper bound C(n,k) - C(n-t,k-t) - 1 is not known to
be attained; this compares it with the exact value on every graph the exact
solver handles.
"""

import argparse

from knesertw.corpus import kneser_params
from knesertw.exactsolver import SolverLimits, exact_treewidth
from knesertw.kneser import build_graph
from knesertw.tdecomp import upper_bound_formula, validate_decomposition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=21)
    ap.add_argument("--time-limit", type=float, default=600.0)
    args = ap.parse_args()
    limits = SolverLimits(time_limit=args.time_limit)
    print(f"{'graph':>12} {'|V|':>4} {'tw':>4} {'bound':>5} {'boundary':>8} {'method':>16}")
    for p in kneser_params(args.max_vertices):
        g = build_graph(p).graph
        res = exact_treewidth(g, limits)
        assert validate_decomposition(g, res.certificate).valid
        tw = res.treewidth if res.exact else f"{res.lower}..{res.upper}"
        boundary = p.n == (p.t + 1) * (p.k + 1 - p.t)
        print(f"{str(p):>12} {g.n:>4} {tw!s:>4} {upper_bound_formula(p):>5} {str(boundary):>8} {res.method:>16}")


if __name__ == "__main__":
    main()
