"""Sweep the pencil inequality and the degree bound, reporting the tightest cases."""

import argparse

from knesertw.suites import lemma5_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args()
    checks, lines, ok = lemma5_suite(range(2, args.nmax + 1))
    for line in lines:
        print(line)
    lemma = [c for c in checks if c.condition == "lemma5"]
    equal = [c for c in lemma if c.lhs == c.rhs]
    print(f"equality cases: {len(equal)}")
    tight = sorted((c for c in lemma if c.lhs < c.rhs), key=lambda c: c.lhs / c.rhs, reverse=True)
    for c in tight[: args.top]:
        p = c.params
        print(f"  ({p['n']},{p['k']},{p['t']}): {c.lhs} / {c.rhs} = {float(c.lhs / c.rhs):.4f}")
    print("PASS" if ok else "FAIL")


if __name__ == "__main__":
    main()
