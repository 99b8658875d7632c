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
Simple undirected graphs and their structural queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from logging import getLogger
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict

from .exceptions import GraphError, GraphTooLarge, OutOfRangeVertex, SelfLoop

if TYPE_CHECKING:
    from typing_extensions import Self

logger = getLogger(__name__)

MAX_VERTICES = 4096


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Simple undirected graph on the vertices `0..n-1`.

    The adjacency matrix is a read-only symmetric boolean array with a false diagonal.
    Graph objects are immutable, and safe to share between threads.
    """

    adjacency: np.ndarray

    def __post_init__(self) -> None:
        adjacency = np.array(self.adjacency, dtype=bool, copy=True)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise GraphError(f"Adjacency matrix must be square, got shape {adjacency.shape}")
        n = adjacency.shape[0]
        if n < 1:
            raise GraphError("A graph must have at least one vertex")
        if n > MAX_VERTICES:
            raise GraphTooLarge(f"Graph on {n} vertices exceeds the cap of {MAX_VERTICES}")
        if not np.array_equal(adjacency, adjacency.T):
            raise GraphError("Adjacency matrix must be symmetric")
        loops = np.flatnonzero(np.diagonal(adjacency))
        if loops.size:
            raise SelfLoop(int(loops[0]))
        adjacency.setflags(write=False)
        object.__setattr__(self, "adjacency", adjacency)

    @classmethod
    def empty(cls, n: int) -> Self:
        """
        Create the edgeless graph on `n` vertices.
        """

        return cls(np.zeros((n, n), dtype=bool))

    @property
    def n(self) -> int:
        return int(self.adjacency.shape[0])

    @cached_property
    def m(self) -> int:
        return int(np.count_nonzero(self.adjacency)) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        degrees = self.adjacency.sum(axis=1).astype(np.int64)
        degrees.setflags(write=False)
        return degrees

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max())

    @property
    def second_max_degree(self) -> int:
        if self.n < 2:
            return 0
        return int(np.sort(self.degrees)[-2])

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def degree_sequence(self) -> Tuple[int, ...]:
        """
        Vertex degrees in non-increasing order.
        """

        return tuple(int(d) for d in sorted(self.degrees, reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, v: int) -> List[int]:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def edges(self) -> List[Tuple[int, int]]:
        """
        Edges as `(u, v)` pairs with `u < v`, in row-major order.
        """

        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(u), int(v)) for u, v in zip(rows, cols)]

    def relabel(self, order: Iterable[int]) -> Graph:
        """
        Return the graph with vertex `order[i]` renamed to `i`.
        """

        index = np.asarray(list(order), dtype=np.int64)
        return Graph(self.adjacency[np.ix_(index, index)])

    def delete_vertex(self, v: int) -> Graph:
        keep = [u for u in range(self.n) if u != v]
        return Graph(self.adjacency[np.ix_(keep, keep)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.adjacency, other.adjacency))

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.adjacency).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Create a graph on `n` vertices from a list of edges.

    Duplicate edges (in either orientation) collapse into one.

    Args:
        n (int): Number of vertices.
        edges (Iterable[Tuple[int, int]]): Vertex pairs.

    Raises:
        OutOfRangeVertex: An endpoint is not in `[0, n)`.
        SelfLoop: An edge joins a vertex to itself.

    Returns:
        Graph object
    """

    if n < 1:
        raise GraphError(f"A graph must have at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise GraphTooLarge(f"Graph on {n} vertices exceeds the cap of {MAX_VERTICES}")
    adjacency = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise OutOfRangeVertex(w, n)
        if u == v:
            raise SelfLoop(u)
        adjacency[u, v] = adjacency[v, u] = True
    return Graph(adjacency)


def distance_matrix(g: Graph) -> np.ndarray:
    """
    All-pairs shortest path lengths, by breadth-first search from every vertex at once.

    Args:
        g (Graph): Input graph.

    Returns:
        `n x n` integer array, with `-1` for unreachable pairs
    """

    adjacency = g.adjacency.astype(np.float64)
    distances = np.full((g.n, g.n), -1, dtype=np.int64)
    np.fill_diagonal(distances, 0)
    reached = np.eye(g.n, dtype=bool)
    frontier = reached.copy()
    level = 0
    while True:
        level += 1
        frontier = ((frontier.astype(np.float64) @ adjacency) > 0) & ~reached
        if not frontier.any():
            break
        distances[frontier] = level
        reached |= frontier
    return distances


def connected_components(g: Graph) -> int:
    """
    Number of connected components.
    """

    seen = np.zeros(g.n, dtype=bool)
    components = 0
    for start in range(g.n):
        if seen[start]:
            continue
        components += 1
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            for u in np.flatnonzero(g.adjacency[v] & ~seen):
                seen[u] = True
                stack.append(int(u))
    return components


def is_connected(g: Graph) -> bool:
    return connected_components(g) == 1


def diameter(g: Graph) -> Optional[int]:
    """
    Diameter of the graph, or `None` if the graph is disconnected.
    """

    distances = distance_matrix(g)
    if (distances < 0).any():
        return None
    return int(distances.max())


def triangle_count(g: Graph) -> int:
    """
    Number of triangles: closed walks of length 3, divided by 6.
    """

    adjacency = g.adjacency.astype(np.int64)
    closed_walks = int(((adjacency @ adjacency) * adjacency).sum())
    return closed_walks // 6


class StructureReport(BaseModel):
    """
    Structural summary of a graph.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    n: int
    m: int
    connected: bool
    components: int
    diameter: Optional[int]
    """
    Graph diameter. `None` stands for an infinite diameter (disconnected graph).
    """

    triangles: int
    degree_sequence: List[int]
    max_degree: int
    second_max_degree: int


def structure_report(g: Graph) -> StructureReport:
    """
    Compute connectivity, diameter, triangle count and degree data for a graph.

    Args:
        g (Graph): Input graph.

    Returns:
        Structure report
    """

    components = connected_components(g)
    return StructureReport(
        n=g.n,
        m=g.m,
        connected=components == 1,
        components=components,
        diameter=diameter(g) if components == 1 else None,
        triangles=triangle_count(g),
        degree_sequence=list(g.degree_sequence()),
        max_degree=g.max_degree,
        second_max_degree=g.second_max_degree,
    )


def tree_centers(g: Graph) -> List[int]:
    """
    Centre vertices of a tree (one or two), found by repeatedly stripping leaves.
    """

    if g.m != g.n - 1 or not is_connected(g):
        raise GraphError(f"{g!r} is not a tree")
    degrees = [int(d) for d in g.degrees]
    remaining = g.n
    leaves = [v for v in range(g.n) if degrees[v] <= 1]
    while remaining > 2:
        remaining -= len(leaves)
        next_leaves = []
        for leaf in leaves:
            degrees[leaf] = 0
            for u in g.neighbors(leaf):
                if degrees[u] > 0:
                    degrees[u] -= 1
                    if degrees[u] == 1:
                        next_leaves.append(u)
        leaves = next_leaves
    return sorted(leaves)


def _rooted_form(g: Graph, root: int) -> str:
    parent: Dict[int, int] = {root: -1}
    order = [root]
    for v in order:
        for u in g.neighbors(v):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    forms: Dict[int, List[str]] = {v: [] for v in order}
    for v in reversed(order):
        form = "(" + "".join(sorted(forms[v])) + ")"
        if parent[v] >= 0:
            forms[parent[v]].append(form)
        else:
            return form
    raise GraphError("Empty tree")  # pragma: no cover


def canonical_tree_form(g: Graph) -> str:
    """
    Canonical string of a tree, equal for two trees if and only if they are isomorphic.

    The tree is rooted at its centre (the lexicographically smaller encoding
    is taken when there are two centres) and encoded bottom-up with sorted child strings.

    Args:
        g (Graph): A tree.

    Returns:
        Parenthesis encoding of the tree
    """

    return min(_rooted_form(g, center) for center in tree_centers(g))
