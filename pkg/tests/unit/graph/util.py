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
Graph unit test constants and utility functions.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import networkx as nx
import numpy as np

from bhix.graph import Graph

if TYPE_CHECKING:
    from typing import List, Tuple

GRAPH6_EXAMPLES: List[Tuple[str, int, List[Tuple[int, int]]]] = [
    # (graph6, n, edges)
    ("@", 1, []),
    ("A_", 2, [(0, 1)]),
    ("Bg", 3, [(0, 1), (1, 2)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("Cs", 4, [(0, 1), (0, 2), (0, 3)]),
    ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("C?", 4, []),
]


def to_networkx(g: Graph) -> nx.Graph:
    """
    Convert a graph to a networkx graph on the same vertex labels.
    """

    oracle = nx.Graph()
    oracle.add_nodes_from(range(g.n))
    oracle.add_edges_from(g.edges())
    return oracle


def from_networkx(oracle: nx.Graph) -> Graph:
    """
    Convert a networkx graph on the vertices `0..n-1` to a graph.
    """

    n = oracle.number_of_nodes()
    return Graph(nx.to_numpy_array(oracle, nodelist=range(n), dtype=np.int64) > 0)
