"""Shared worked-example data used across the test modules.

The 19-node figure pair: a mapping with three components and the marked
tree it corresponds to under the path-cycling bijection, together with
its run-start set and run-partition table.
"""

FIG_MAPPING = (7, 1, 10, 14, 17, 7, 11, 10, 16, 10, 17, 7, 17, 4, 7, 4, 1, 13, 13)

FIG_TREE_PARENT = (7, 1, 10, 14, 17, 7, 11, 10, 16, 10, 17, 7, 17, 10, 7, 4, 4, 13, 13)
FIG_TREE_ROOT = 10
FIG_MARK = 1

FIG_RUN_STARTS = frozenset({1, 2, 3, 4, 5, 6, 8, 9, 12, 13, 15, 18, 19})
FIG_RUN_COUNT = 13
FIG_ASCENTS = 10

FIG_COMPONENTS = (
    frozenset({1, 2, 5, 6, 7, 11, 12, 13, 15, 17, 18, 19}),
    frozenset({3, 8, 10}),
    frozenset({4, 9, 14, 16}),
)
FIG_CYCLIC = frozenset({1, 7, 11, 17, 10, 4, 14})

FIG_PARTITION_BLOCKS = (
    frozenset({19}),
    frozenset({18}),
    frozenset({17, 13}),
    frozenset({16, 9}),
    frozenset({15}),
    frozenset({14, 4}),
    frozenset({12}),
    frozenset({11, 7, 6}),
    frozenset({10, 8}),
    frozenset({5}),
    frozenset({3}),
    frozenset({2}),
    frozenset({1}),
)
FIG_PARTITION_LINKS = (13, 13, 1, 4, 7, 4, 7, 17, 10, 17, 10, 1, 7)
