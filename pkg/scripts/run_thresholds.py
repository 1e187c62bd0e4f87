"""Tabulate K(c) and the searched threshold K'(c), with the search log for each c."""

import argparse
import time

from knesertw import verify as V


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cmax", type=int, default=6)
    ap.add_argument("--log", action="store_true", help="print every k tried")
    args = ap.parse_args()
    print(f"{'c':>3} {'K(c)':>14} {'K(c) ~':>10} {'Kprime':>7} {'window':>14} {'secs':>6}")
    for c in range(1, args.cmax + 1):
        start = time.perf_counter()
        res = V.compute_Kprime(c)
        secs = time.perf_counter() - start
        K = res.K_of_c
        print(f"{c:>3} {str(K):>14} {float(K):>10.2f} {res.K_prime:>7} {str(res.window):>14} {secs:>6.2f}")
        if args.log:
            for k, lhs, rhs, fails in res.search_log:
                print(f"      k={k} n-t={lhs} rhs={float(rhs):.3f} {'fails' if fails else 'holds'}")


if __name__ == "__main__":
    main()
