#!/usr/bin/env python3
"""Print run-count tables from brute force next to the Stirling closed forms.

The exhaustive scan enumerates all n^n arrays; n = 8 is about 1.7e7
arrays and is worth the --workers flag.
"""

import argparse
import time

from cayley_runs import brute_force_tables, mapping_runs, tree_runs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        t0 = time.time()
        tree_t, map_t, conn_t = brute_force_tables(
            n, workers=args.workers, max_size=args.n_max)
        elapsed = time.time() - t0
        print(f"n={n}  ({elapsed:.2f}s, {n ** n} arrays)")
        print(f"  {'m':>3} {'trees':>14} {'formula':>14} "
              f"{'mappings':>16} {'formula':>16} {'connected':>14}")
        for m in range(1, n + 1):
            print(f"  {m:>3} {tree_t.values.get(m, 0):>14} {tree_runs(n, m):>14} "
                  f"{map_t.values.get(m, 0):>16} {mapping_runs(n, m):>16} "
                  f"{conn_t.values.get(m, 0):>14}")
        assert tree_t.values == {m: tree_runs(n, m) for m in range(1, n + 1)
                                 if tree_runs(n, m)}
        assert map_t.values == {m: mapping_runs(n, m) for m in range(1, n + 1)
                                if mapping_runs(n, m)}
    print("all brute-force tables match the closed forms")


if __name__ == "__main__":
    main()
