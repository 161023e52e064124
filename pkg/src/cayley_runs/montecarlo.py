"""Uniform random mappings and trees, and run-count statistics for the limit law.

Sampling uses numpy's PCG64 generator seeded through SeedSequence.  Work
is laid out in fixed-size chunks whose per-chunk streams are spawned
from the root seed, so a run is bit-identical for any worker count:
histograms are integer tallies merged by addition, and the moments are
derived from exact integer sums over the merged histogram.

Trees are drawn by pulling a uniform mapping back through the
tree-mapping bijection and discarding the mark; each tree arises from
exactly n marked pairs, so the result is uniform.  This deliberately
exercises the bijection inside the sampling hot path.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from .bijections import mapping_to_tree
from .core import CayleyTree, Mapping, make_mapping
from .runs import run_starts_tree

_CHUNK_CELLS = 1 << 21  # rows per chunk scale as budget // n, fixed given n


class DegenerateVarianceError(ValueError):
    pass


@dataclass(frozen=True)
class RunStatistics:
    n: int
    samples: int
    mean: float
    variance: float
    histogram: dict[int, int]

    def __post_init__(self) -> None:
        if sum(self.histogram.values()) != self.samples:
            raise ValueError("histogram frequencies must sum to the sample count")


@dataclass(frozen=True)
class NormalityReport:
    ks_statistic: float
    samples: int


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def sample_mapping(n: int, seed) -> Mapping:
    """Uniform mapping: n independent uniform draws from [1, n]."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = _as_generator(seed)
    return make_mapping(int(x) for x in rng.integers(1, n + 1, size=n))


def sample_tree(n: int, seed) -> CayleyTree:
    """Uniform labelled rooted tree, via the bijection from a uniform mapping."""
    return mapping_to_tree(sample_mapping(n, seed)).tree


def _count_runs_rows(arr: np.ndarray) -> np.ndarray:
    """Run counts for a batch of image arrays (rows), vectorized.

    A node j has a smaller preimage exactly when some column i < j holds
    value j; the run count is n minus the number of such nodes.
    """
    rows, n = arr.shape
    flags = np.zeros((rows, n + 1), dtype=bool)
    ascending = arr > np.arange(1, n + 1)
    r, c = np.nonzero(ascending)
    flags[r, arr[r, c]] = True
    return n - flags[:, 1:].sum(axis=1)


def _chunk_layout(n: int, samples: int) -> list[int]:
    rows = max(1, _CHUNK_CELLS // max(n, 1))
    sizes = []
    left = samples
    while left > 0:
        take = min(rows, left)
        sizes.append(take)
        left -= take
    return sizes


def _chunk_histogram(args) -> np.ndarray:
    n, rows, seed_seq, use_trees = args
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    arr = rng.integers(1, n + 1, size=(rows, n))
    if use_trees:
        counts = np.empty(rows, dtype=np.int64)
        for k in range(rows):
            tree = mapping_to_tree(make_mapping(int(x) for x in arr[k])).tree
            counts[k] = run_starts_tree(tree).count
    else:
        counts = _count_runs_rows(arr)
    return np.bincount(counts, minlength=n + 1)


def run_statistics(
    n: int,
    samples: int,
    seed,
    workers: int = 1,
    use_trees: bool = False,
) -> RunStatistics:
    """Histogram, mean and variance of the run count over seeded samples.

    The histogram is exact; mean and variance come from its integer
    power sums, so the output is identical for any worker count.
    """
    if n < 1 or samples < 1:
        raise ValueError("n and samples must be positive")
    sizes = _chunk_layout(n, samples)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(n, rows, s, use_trees) for rows, s in zip(sizes, seeds)]
    if workers <= 1 or len(jobs) == 1:
        parts = [_chunk_histogram(job) for job in jobs]
    else:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            parts = pool.map(_chunk_histogram, jobs)
    hist = np.zeros(n + 1, dtype=np.int64)
    for p in parts:
        hist += p
    support = np.nonzero(hist)[0]
    s1 = int((support * hist[support]).sum())
    s2 = int((support.astype(object) ** 2 * hist[support]).sum())
    mean = s1 / samples
    variance = (s2 * samples - s1 * s1) / (samples * samples)
    return RunStatistics(
        n=n,
        samples=samples,
        mean=mean,
        variance=variance,
        histogram={int(m): int(hist[m]) for m in support},
    )


def _std_normal_cdf(x: float) -> float:
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))


def normality_check(stats: RunStatistics) -> NormalityReport:
    """Sup distance between the standardized run-count ECDF and the normal CDF.

    Run counts sit on an integer lattice, so the ECDF at a support point
    includes the whole atom; the Gaussian is therefore evaluated at the
    upper cell edge c + 1/2 after standardizing.  Without that half-step
    the statistic is floored near phi(0)/(2 sigma) by the lattice alone,
    regardless of how many samples are drawn.
    """
    if stats.variance <= 0.0:
        raise DegenerateVarianceError("variance must be positive to standardize")
    sd = math.sqrt(stats.variance)
    cum = 0
    ks = 0.0
    for c in sorted(stats.histogram):
        cum += stats.histogram[c]
        ecdf = cum / stats.samples
        gauss = _std_normal_cdf((c + 0.5 - stats.mean) / sd)
        ks = max(ks, abs(ecdf - gauss))
    return NormalityReport(ks_statistic=ks, samples=stats.samples)
