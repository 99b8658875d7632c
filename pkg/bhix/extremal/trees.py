# Copyright (C) 2024 Callum Dickinson
#
# bhix is free software: you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation,
# either version 3 of the License, or (at your option) any later version.
#
# bhix is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with bhix.
# If not, see <https://www.gnu.org/licenses/>.


"""
Enumeration of unlabelled free trees by canonical level sequences.

Each tree is visited once, as the level sequence (vertex depths in preorder) of its
canonical rooting at the centre. Trees with one centre are built from branches of
bounded height, trees with two centres from the pair of rooted trees on either side
of the central edge. Rooted trees are tabulated once per size and height.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from functools import lru_cache
from logging import getLogger
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidParams, TooLarge
from ..graph import Graph

logger = getLogger(__name__)

TREE_MAX_N = 18

LevelSequence = Tuple[int, ...]


def _graft(children: Sequence[LevelSequence]) -> LevelSequence:
    # Hang every child sequence one level below a new root.
    return (0, *(level + 1 for child in children for level in child))


@lru_cache(maxsize=None)
def _rooted_trees(size: int, height: int) -> Tuple[LevelSequence, ...]:
    """
    Canonical level sequences of every rooted tree with `size` vertices and height at
    most `height`, in increasing order.
    """

    if size == 1:
        return ((0,),)
    if height == 0:
        return ()
    return tuple(sorted(_graft(children) for children in _forests(size - 1, height - 1, 0)))


def _rooted_trees_of_height(size: int, height: int) -> Tuple[LevelSequence, ...]:
    return tuple(tree for tree in _rooted_trees(size, height) if max(tree) == height)


def _forests(
    total: int,
    height: int,
    tall: int,
    bound: Optional[LevelSequence] = None,
) -> Iterator[Tuple[LevelSequence, ...]]:
    """
    Every multiset of canonical rooted trees with `total` vertices in all, each of
    height at most `height` and at least `tall` of them of height exactly `height`.

    Trees are listed by decreasing size, then decreasing level sequence, and none
    exceeds `bound`, so each multiset is produced once.
    """

    if total == 0:
        if tall == 0:
            yield ()
        return
    if tall * (height + 1) > total:
        return
    largest = total - max(tall - 1, 0) * (height + 1)
    if bound is not None:
        largest = min(largest, len(bound))
    for size in range(largest, 0, -1):
        trees = _rooted_trees(size, height)
        if bound is not None and size == len(bound):
            trees = trees[: bisect_right(trees, bound)]
        for tree in reversed(trees):
            remaining = max(tall - (max(tree) == height), 0)
            for rest in _forests(total - size, height, remaining, tree):
                yield (tree, *rest)


def _centred_trees(n: int) -> Iterator[LevelSequence]:
    if n == 1:
        yield (0,)
        return
    # One centre: at least two branches reach the radius.
    for radius in range(1, (n - 1) // 2 + 1):
        for branches in _forests(n - 1, radius - 1, 2):
            yield _graft(branches)
    # Two centres: both sides of the central edge have the same height,
    # and the larger side (by size, then sequence) holds the root.
    for radius in range((n - 2) // 2 + 1):
        for size in range(n - radius - 1, (n + 1) // 2 - 1, -1):
            others = _rooted_trees_of_height(n - size, radius)
            for root_side in _rooted_trees_of_height(size, radius):
                for other_side in others:
                    if size == n - size and other_side > root_side:
                        continue
                    yield root_side + tuple(level + 1 for level in other_side)


def level_sequence_parents(levels: Sequence[int]) -> List[int]:
    """
    Parent of every vertex of a level sequence (`-1` for the root).
    """

    parents = [-1] * len(levels)
    stack: List[int] = []
    for i, level in enumerate(levels):
        while stack and levels[stack[-1]] >= level:
            stack.pop()
        if stack:
            parents[i] = stack[-1]
        stack.append(i)
    return parents


def level_sequence_to_graph(levels: Sequence[int]) -> Graph:
    adjacency = np.zeros((len(levels), len(levels)), dtype=bool)
    for child, parent in enumerate(level_sequence_parents(levels)):
        if parent >= 0:
            adjacency[child, parent] = adjacency[parent, child] = True
    return Graph(adjacency)


def level_sequence_laplacians(sequences: Sequence[Sequence[int]]) -> np.ndarray:
    """
    Laplacians of a batch of trees of the same order, as an array of shape `(k, n, n)`.
    """

    k = len(sequences)
    n = len(sequences[0])
    parents = np.array([level_sequence_parents(levels)[1:] for levels in sequences], dtype=np.int64)
    laplacians = np.zeros((k, n, n), dtype=np.float64)
    rows = np.repeat(np.arange(k), n - 1)
    children = np.tile(np.arange(1, n), k)
    laplacians[rows, children, parents.ravel()] = -1.0
    laplacians[rows, parents.ravel(), children] = -1.0
    index = np.arange(n)
    laplacians[:, index, index] = -laplacians.sum(axis=2)
    return laplacians


def tree_diameter(levels: Sequence[int]) -> int:
    """
    Diameter of a tree given by its level sequence, by two breadth-first searches.
    """

    n = len(levels)
    neighbours: List[List[int]] = [[] for _ in range(n)]
    for child, parent in enumerate(level_sequence_parents(levels)):
        if parent >= 0:
            neighbours[child].append(parent)
            neighbours[parent].append(child)

    def farthest(source: int) -> Tuple[int, int]:
        distance = [-1] * n
        distance[source] = 0
        queue = deque([source])
        last = source
        while queue:
            last = queue.popleft()
            for w in neighbours[last]:
                if distance[w] < 0:
                    distance[w] = distance[last] + 1
                    queue.append(w)
        return last, distance[last]

    end, _ = farthest(0)
    return farthest(end)[1]


class TreeIterator:
    """
    Every unlabelled free tree on `n` vertices, each exactly once.

    Iterating yields `Graph` objects; `sequences()` yields the underlying
    canonical level sequences.

    ```python
    sum(1 for _ in TreeIterator(10))  # 106
    ```
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise InvalidParams(f"Trees need at least 1 vertex, got n={n}")
        if n > TREE_MAX_N:
            raise TooLarge(f"Tree enumeration is capped at n={TREE_MAX_N}, got n={n}")
        self.n = n

    def sequences(self) -> Iterator[LevelSequence]:
        count = 0
        for levels in _centred_trees(self.n):
            count += 1
            yield levels
        logger.debug("Enumerated %i free trees on %i vertices", count, self.n)

    def __iter__(self) -> Iterator[Graph]:
        for levels in self.sequences():
            yield level_sequence_to_graph(levels)


def enumerate_trees(n: int) -> TreeIterator:
    """
    Enumerate the unlabelled free trees on `n` vertices.

    Args:
        n (int): Vertex count (`1 <= n <= 18`).

    Raises:
        TooLarge: `n > 18`.

    Returns:
        Tree iterator
    """

    return TreeIterator(n)
