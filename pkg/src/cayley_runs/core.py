"""Labelled rooted trees and mappings on [n] = {1, ..., n}.

Trees are stored as parent arrays with the root pointing to itself;
mappings as image arrays.  All labels are 1-based at every interface,
matching the usual combinatorial convention for [n].  Values are
immutable after construction and every operation here is pure, so they
can be shared freely across worker processes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class InvalidTreeError(ValueError):
    """Parent array does not encode a rooted tree."""


class NoRootError(InvalidTreeError):
    pass


class MultipleRootsError(InvalidTreeError):
    pass


class CycleDetectedError(InvalidTreeError):
    pass


class LabelOutOfRangeError(ValueError):
    """An entry lies outside [1, n]."""


@dataclass(frozen=True)
class CayleyTree:
    """Rooted labelled tree on [n]; ``parent[v-1]`` is the parent of v, root is self-parented."""

    n: int
    parent: tuple[int, ...]
    root: int

    def parent_of(self, v: int) -> int:
        return self.parent[v - 1]

    def to_text(self) -> str:
        return " ".join(str(p) for p in self.parent)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "parent": list(self.parent)})


@dataclass(frozen=True)
class Mapping:
    """Function [n] -> [n]; ``image[i-1]`` is f(i)."""

    n: int
    image: tuple[int, ...]

    def apply(self, i: int) -> int:
        return self.image[i - 1]

    def to_text(self) -> str:
        return " ".join(str(j) for j in self.image)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "image": list(self.image)})


@dataclass(frozen=True)
class ComponentDecomposition:
    """Weakly connected components of a functional digraph plus its cyclic nodes."""

    components: tuple[frozenset[int], ...]
    cyclic: frozenset[int]


def _check_labels(values: tuple[int, ...]) -> None:
    n = len(values)
    if n < 1:
        raise LabelOutOfRangeError("need at least one node")
    for x in values:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise LabelOutOfRangeError(f"label {x!r} outside [1, {n}]")


def make_mapping(image) -> Mapping:
    """Validate an image array and wrap it as a Mapping."""
    image = tuple(image)
    _check_labels(image)
    return Mapping(n=len(image), image=image)


def make_tree(parent) -> CayleyTree:
    """Validate a parent array (root self-parented) and wrap it as a CayleyTree.

    Raises NoRootError / MultipleRootsError / CycleDetectedError when the
    array has zero or several fixed points, or a non-root cycle.
    """
    parent = tuple(parent)
    _check_labels(parent)
    n = len(parent)
    roots = [v for v in range(1, n + 1) if parent[v - 1] == v]
    if not roots:
        raise NoRootError("no self-parented node")
    if len(roots) > 1:
        raise MultipleRootsError(f"multiple roots: {roots}")
    root = roots[0]
    # Every node must reach the root; stamp visited paths so the scan is O(n).
    state = [0] * (n + 1)  # 0 unseen, 1 on current walk, 2 known-good
    state[root] = 2
    for s in range(1, n + 1):
        if state[s]:
            continue
        walk = []
        u = s
        while state[u] == 0:
            state[u] = 1
            walk.append(u)
            u = parent[u - 1]
        if state[u] == 1:
            raise CycleDetectedError(f"cycle through node {u}")
        for x in walk:
            state[x] = 2
    return CayleyTree(n=n, parent=parent, root=root)


def cyclic_nodes(m: Mapping) -> frozenset[int]:
    """Nodes j with f^k(j) = j for some k >= 1."""
    n = m.n
    image = m.image
    state = [0] * (n + 1)  # 0 unseen, 1 on current walk, 2 done
    cyclic: set[int] = set()
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
            cyclic.update(walk[walk.index(u):])
        for x in walk:
            state[x] = 2
    return frozenset(cyclic)


def components(m: Mapping) -> ComponentDecomposition:
    """Partition [n] into weakly connected components, ordered by smallest node."""
    n = m.n
    uf = list(range(n + 1))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for i in range(1, n + 1):
        ri, rj = find(i), find(m.image[i - 1])
        if ri != rj:
            uf[ri] = rj

    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    comps = sorted(groups.values(), key=min)
    return ComponentDecomposition(
        components=tuple(frozenset(c) for c in comps),
        cyclic=cyclic_nodes(m),
    )


def preimages(m: Mapping, j: int) -> frozenset[int]:
    """The set {i : f(i) = j}."""
    if not 1 <= j <= m.n:
        raise LabelOutOfRangeError(f"label {j} outside [1, {m.n}]")
    return frozenset(i for i in range(1, m.n + 1) if m.image[i - 1] == j)


def _parse_labels(text: str) -> list[int]:
    return [int(tok) for tok in text.split()]


def mapping_from_text(text: str) -> Mapping:
    """Parse the one-line space-separated image format, e.g. ``2 1``."""
    return make_mapping(_parse_labels(text))


def tree_from_text(text: str) -> CayleyTree:
    """Parse the one-line parent format with a self-referential root."""
    return make_tree(_parse_labels(text))


def mapping_from_json(text: str) -> Mapping:
    obj = json.loads(text)
    m = make_mapping(obj["image"])
    if "n" in obj and obj["n"] != m.n:
        raise LabelOutOfRangeError(f"declared n={obj['n']} but {m.n} entries")
    return m


def tree_from_json(text: str) -> CayleyTree:
    obj = json.loads(text)
    t = make_tree(obj["parent"])
    if "n" in obj and obj["n"] != t.n:
        raise LabelOutOfRangeError(f"declared n={obj['n']} but {t.n} entries")
    return t


def load_mapping(text: str) -> Mapping:
    """Parse either the JSON or the plain text mapping format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return mapping_from_json(stripped)
    return mapping_from_text(stripped)


def load_tree(text: str) -> CayleyTree:
    """Parse either the JSON or the plain text tree format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return tree_from_json(stripped)
    return tree_from_text(stripped)
