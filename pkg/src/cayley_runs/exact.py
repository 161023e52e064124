"""Exact run counting: Stirling-number closed forms, moments, brute-force oracles.

Everything here is big-integer or exact-rational arithmetic; the counts
overflow any fixed width long before n = 50.  The brute-force tallies
enumerate raw arrays and are the independent ground truth the closed
forms are checked against.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import threading
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_EXHAUSTIVE_BOUND = 7


class SizeTooLargeError(ValueError):
    """Requested size exceeds the configured exhaustive-enumeration bound."""


@dataclass(frozen=True)
class CountTable:
    """Counts by number of runs: values[m] objects of size n with m runs."""

    n: int
    values: dict[int, int]

    def total(self) -> int:
        return sum(self.values.values())


@dataclass(frozen=True)
class ExactMoments:
    mean: Fraction
    variance: Fraction


_stirling_rows: list[list[int]] = [[1]]  # _stirling_rows[n][m] = S(n, m)
_stirling_lock = threading.Lock()


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into m blocks."""
    if m < 0 or n < 0 or m > n:
        return 0
    if len(_stirling_rows) <= n:
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                k = len(_stirling_rows)
                prev = _stirling_rows[-1]
                row = [0] * (k + 1)
                for j in range(1, k + 1):
                    row[j] = j * (prev[j] if j < k else 0) + prev[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][m]


def falling_factorial(n: int, m: int) -> int:
    """n (n-1) ... (n-m+1); the empty product for m = 0."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = 1
    for k in range(m):
        out *= n - k
    return out


def tree_runs(n: int, m: int) -> int:
    """Number of size-n labelled rooted trees with exactly m ascending runs."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return falling_factorial(n - 1, m - 1) * stirling2(n, m)


def mapping_runs(n: int, m: int) -> int:
    """Number of size-n mappings with exactly m ascending runs; n times the tree count."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return falling_factorial(n, m) * stirling2(n, m)


def tree_runs_alternating(n: int, m: int) -> int:
    """Tree count via the alternating sum C(n-1, m-1) sum_l (l+1)^(n-1) (-1)^(m-1-l) C(m-1, l)."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    acc = 0
    for ell in range(m):
        term = (ell + 1) ** (n - 1) * math.comb(m - 1, ell)
        acc += term if (m - 1 - ell) % 2 == 0 else -term
    return math.comb(n - 1, m - 1) * acc


def tree_run_table(n: int) -> CountTable:
    return CountTable(n=n, values={m: tree_runs(n, m) for m in range(1, n + 1)})


def mapping_run_table(n: int) -> CountTable:
    return CountTable(n=n, values={m: mapping_runs(n, m) for m in range(1, n + 1)})


def exact_moments(n: int) -> ExactMoments:
    """Mean and variance of the run count under the uniform mapping distribution."""
    if n < 1:
        raise ValueError("n must be positive")
    total = n ** n
    s1 = sum(m * mapping_runs(n, m) for m in range(1, n + 1))
    s2 = sum(m * m * mapping_runs(n, m) for m in range(1, n + 1))
    mean = Fraction(s1, total)
    return ExactMoments(mean=mean, variance=Fraction(s2, total) - mean * mean)


def _tally_prefixes(n: int, firsts: tuple[int, ...]) -> tuple[list[int], list[int], list[int]]:
    """Scan all arrays in [n]^n whose first entry is in ``firsts``.

    One pass serves all three tables: every array is a mapping; the
    connected ones with a fixed point are exactly the parent arrays of
    valid trees (a connected functional graph has one cycle, and a
    fixed-point cycle makes it a rooted tree), and the self-loop at the
    root never affects the run-start predicate.
    """
    tree = [0] * (n + 1)
    mapp = [0] * (n + 1)
    conn = [0] * (n + 1)
    rng = range(1, n + 1)
    for first in firsts:
        for rest in itertools.product(rng, repeat=n - 1):
            img = (first, *rest)
            mask = 0
            has_fixed = False
            i = 0
            for j in img:
                i += 1
                if i < j:
                    mask |= 1 << j
                elif i == j:
                    has_fixed = True
            m = n - bin(mask).count("1")
            mapp[m] += 1
            uf = list(range(n + 1))
            comps = n
            i = 0
            for j in img:
                i += 1
                x = i
                while uf[x] != x:
                    uf[x] = uf[uf[x]]
                    x = uf[x]
                y = j
                while uf[y] != y:
                    uf[y] = uf[uf[y]]
                    y = uf[y]
                if x != y:
                    uf[x] = y
                    comps -= 1
            if comps == 1:
                conn[m] += 1
                if has_fixed:
                    tree[m] += 1
    return tree, mapp, conn


def brute_force_tables(
    n: int,
    workers: int = 1,
    max_size: int = DEFAULT_EXHAUSTIVE_BOUND,
) -> tuple[CountTable, CountTable, CountTable]:
    """Exhaustive (tree, mapping, connected-mapping) run tables for size n.

    Enumerates all n^n arrays, so the bound matters; raise it explicitly
    to go beyond the default.  With workers > 1 the space is split by the
    first array entry and per-worker tallies are merged by addition.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_size:
        raise SizeTooLargeError(f"n={n} exceeds exhaustive bound {max_size}")
    if workers <= 1 or n == 1:
        tree, mapp, conn = _tally_prefixes(n, tuple(range(1, n + 1)))
    else:
        chunks = [tuple(range(1 + w, n + 1, workers)) for w in range(min(workers, n))]
        with multiprocessing.get_context("fork").Pool(len(chunks)) as pool:
            parts = pool.starmap(_tally_prefixes, [(n, c) for c in chunks])
        tree = [sum(p[0][m] for p in parts) for m in range(n + 1)]
        mapp = [sum(p[1][m] for p in parts) for m in range(n + 1)]
        conn = [sum(p[2][m] for p in parts) for m in range(n + 1)]

    def table(row: list[int]) -> CountTable:
        return CountTable(n=n, values={m: row[m] for m in range(1, n + 1) if row[m]})

    return table(tree), table(mapp), table(conn)
