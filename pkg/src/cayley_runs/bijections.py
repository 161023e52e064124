"""Bijections between marked trees, mappings, and run partitions.

Two constructions live here.  The first identifies a pair (tree, marked
node) with a mapping: walking from the mark to the root, the
right-to-left maxima of the label sequence are re-wired into cycles, so
a tree with a mark corresponds to exactly one mapping and vice versa.
The second decomposes a mapping into its ascending runs, producing an
ordered set partition (blocks sorted by decreasing maximum) together
with a link sequence recording the image of each block's largest
element; the pair determines the mapping uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import CayleyTree, LabelOutOfRangeError, Mapping, make_mapping, make_tree
from .exact import SizeTooLargeError

LinkSequence = tuple[int, ...]


class InvalidLinkSequenceError(ValueError):
    """Link sequence violates the restriction tied to its partition."""


@dataclass(frozen=True)
class MarkedTree:
    tree: CayleyTree
    mark: int

    def __post_init__(self) -> None:
        if not 1 <= self.mark <= self.tree.n:
            raise LabelOutOfRangeError(f"mark {self.mark} outside [1, {self.tree.n}]")


@dataclass(frozen=True)
class RootPath:
    """Node sequence from a mark up to the root, with its right-to-left maxima.

    ``maxima_indices`` are 0-based positions p into ``nodes`` such that
    nodes[p] exceeds every later entry; the last position is always one
    of them.
    """

    nodes: tuple[int, ...]
    maxima_indices: tuple[int, ...]


def right_to_left_maxima(values) -> tuple[int, ...]:
    """0-based positions of elements strictly larger than everything after them."""
    out = []
    best = 0
    for p in range(len(values) - 1, -1, -1):
        if values[p] > best:
            out.append(p)
            best = values[p]
    out.reverse()
    return tuple(out)


def root_path(t: CayleyTree, w: int) -> RootPath:
    nodes = [w]
    while nodes[-1] != t.root:
        nodes.append(t.parent[nodes[-1] - 1])
    return RootPath(nodes=tuple(nodes), maxima_indices=right_to_left_maxima(nodes))


def tree_to_mapping(mt: MarkedTree) -> Mapping:
    """Turn (tree, mark) into a mapping by cycling the mark-to-root path.

    Off the path-maxima, every node keeps its parent as image.  The
    right-to-left maxima close cycles instead: the first one maps to the
    mark, each later one to the parent of the previous maximum.  The
    path nodes become exactly the cyclic nodes of the result.
    """
    t = mt.tree
    rp = root_path(t, mt.mark)
    nodes, idxs = rp.nodes, rp.maxima_indices
    image = list(t.parent)
    image[nodes[idxs[0]] - 1] = nodes[0]
    for ell in range(1, len(idxs)):
        image[nodes[idxs[ell]] - 1] = t.parent[nodes[idxs[ell - 1]] - 1]
    return make_mapping(image)


def _cycle_maxima(image: tuple[int, ...]) -> list[int]:
    """Largest node of each cycle (one cycle per weak component)."""
    n = len(image)
    state = bytearray(n + 1)  # 0 unseen, 1 on current walk, 2 done
    maxima = []
    for s in range(1, n + 1):
        if state[s]:
            continue
        walk = []
        u = s
        while state[u] == 0:
            state[u] = 1
            walk.append(u)
            u = image[u - 1]
        if state[u] == 1:
            maxima.append(max(walk[walk.index(u):]))
        for x in walk:
            state[x] = 2
    return maxima


def mapping_to_tree(m: Mapping) -> MarkedTree:
    """Inverse construction: cut each cycle at its largest node and chain the pieces.

    With the cycle maxima sorted decreasingly as c_1 > ... > c_t and
    d_i = f(c_i), the edges (c_i, d_i) are replaced by (c_i, d_{i+1});
    c_t becomes the root and d_1 the mark.
    """
    c = sorted(_cycle_maxima(m.image), reverse=True)
    d = [m.image[ci - 1] for ci in c]
    parent = list(m.image)
    for i in range(len(c) - 1):
        parent[c[i] - 1] = d[i + 1]
    parent[c[-1] - 1] = c[-1]
    return MarkedTree(tree=make_tree(parent), mark=d[0])


@dataclass(frozen=True)
class OrderedSetPartition:
    """Disjoint non-empty blocks covering [n], ordered by decreasing maximum."""

    blocks: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)


def make_partition(blocks) -> OrderedSetPartition:
    blocks = tuple(frozenset(b) for b in blocks)
    if not blocks or any(not b for b in blocks):
        raise ValueError("blocks must be non-empty")
    n = sum(len(b) for b in blocks)
    union = set().union(*blocks)
    if union != set(range(1, n + 1)):
        raise ValueError("blocks must partition [n]")
    maxima = [max(b) for b in blocks]
    if any(later >= earlier for later, earlier in zip(maxima[1:], maxima)):
        raise ValueError("blocks must be ordered by strictly decreasing maximum")
    return OrderedSetPartition(blocks=blocks)


def forbidden_links(partition: OrderedSetPartition) -> tuple[frozenset[int], ...]:
    """Per block j, the values its link must avoid.

    Block i < j contributes the smallest element of block i that exceeds
    max(block j); such an element always exists since maxima decrease.
    """
    out = []
    maxima = [max(b) for b in partition.blocks]
    for j in range(len(partition.blocks)):
        out.append(frozenset(
            min(x for x in partition.blocks[i] if x > maxima[j])
            for i in range(j)
        ))
    return tuple(out)


def encode_partition(m: Mapping) -> tuple[OrderedSetPartition, LinkSequence]:
    """Decompose a mapping into run blocks plus the links that glue them.

    Repeatedly take the largest unused element, then descend through the
    largest preimage carrying a smaller label until none exists; the
    visited elements form one block (an ascending run, read increasingly),
    and the link stores the image of the block's largest element.
    """
    n = m.n
    pre_smaller: list[list[int]] = [[] for _ in range(n + 1)]
    for i, j in enumerate(m.image, start=1):
        if i < j:
            pre_smaller[j].append(i)
    used = bytearray(n + 1)
    blocks: list[frozenset[int]] = []
    links: list[int] = []
    for top in range(n, 0, -1):
        if used[top]:
            continue
        block = []
        cur = top
        while True:
            block.append(cur)
            used[cur] = 1
            cands = [i for i in pre_smaller[cur] if not used[i]]
            if not cands:
                break
            cur = max(cands)
        blocks.append(frozenset(block))
        links.append(m.image[top - 1])
    return OrderedSetPartition(blocks=tuple(blocks)), tuple(links)


def decode_partition(s: OrderedSetPartition, x: LinkSequence) -> Mapping:
    """Rebuild the mapping from run blocks and links.

    Within a block sorted increasingly each element maps to the next;
    the largest element maps to its link.  Rejects link sequences that
    break the restriction, since those pairs are outside the image of
    ``encode_partition``.
    """
    n = s.n
    if len(x) != len(s.blocks):
        raise InvalidLinkSequenceError(
            f"{len(x)} links for {len(s.blocks)} blocks")
    for nj in x:
        if not 1 <= nj <= n:
            raise InvalidLinkSequenceError(f"link {nj} outside [1, {n}]")
    for j, (nj, bad) in enumerate(zip(x, forbidden_links(s))):
        if nj in bad:
            raise InvalidLinkSequenceError(
                f"link {nj} for block {j + 1} is forbidden by an earlier block")
    image = [0] * n
    for block, nj in zip(s.blocks, x):
        run = sorted(block)
        for a, b in zip(run, run[1:]):
            image[a - 1] = b
        image[run[-1] - 1] = nj
    return make_mapping(image)


def _set_partitions(n: int, m: int) -> Iterator[list[list[int]]]:
    """All set partitions of [n] into exactly m blocks."""
    blocks: list[list[int]] = []

    def place(k: int) -> Iterator[list[list[int]]]:
        if k > n:
            if len(blocks) == m:
                yield [list(b) for b in blocks]
            return
        if m - len(blocks) > n - k + 1:
            return
        for b in blocks:
            b.append(k)
            yield from place(k + 1)
            b.pop()
        if len(blocks) < m:
            blocks.append([k])
            yield from place(k + 1)
            blocks.pop()

    yield from place(1)


def count_valid_pairs(n: int, m: int, max_size: int = 7) -> int:
    """Count (partition, link sequence) pairs satisfying the restriction.

    Enumerates every ordered set partition of [n] into m blocks and, per
    block, counts the admissible link values from the explicit forbidden
    sets.  Exhaustive oracle, intended for small n.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if n > max_size:
        raise SizeTooLargeError(f"n={n} exceeds exhaustive bound {max_size}")
    total = 0
    for raw in _set_partitions(n, m):
        partition = make_partition(sorted((frozenset(b) for b in raw),
                                          key=max, reverse=True))
        prod = 1
        for bad in forbidden_links(partition):
            prod *= n - len(bad)
        total += prod
    return total
