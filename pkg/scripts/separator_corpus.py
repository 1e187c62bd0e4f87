"""Minimum 2/3-separators next to exact treewidth on the small-graph corpus."""

import argparse
import time
from fractions import Fraction

from knesertw.corpus import graph_corpus
from knesertw.exactsolver import exact_treewidth, min_balanced_separator


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=20)
    ap.add_argument("--p", type=Fraction, default=Fraction(2, 3))
    args = ap.parse_args()
    worst = None
    for name, g in sorted(graph_corpus(args.max_vertices).items()):
        start = time.perf_counter()
        sep = min_balanced_separator(g, args.p)
        tw = exact_treewidth(g).treewidth
        size = len(sep.separator)
        slack = tw + 1 - size
        worst = slack if worst is None else min(worst, slack)
        print(f"{name:>12} |V|={g.n:>2} tw={tw:>2} sep={size:>2} slack={slack:>2} "
              f"{time.perf_counter() - start:.2f}s")
    print(f"smallest slack tw + 1 - |X|: {worst}")


if __name__ == "__main__":
    main()
