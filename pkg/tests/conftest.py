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
Unit test fixtures.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest

from bhix.graph import Graph, from_edge_list, is_connected
from bhix.settings import BhixSettings

if TYPE_CHECKING:
    from typing import Callable


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Fixture for a seeded random number generator, so random graphs are reproducible.

    Returns:
        np.random.Generator: Random number generator
    """

    return np.random.default_rng(20240521)


@pytest.fixture
def settings() -> BhixSettings:
    """
    Fixture for numerical settings that run every sweep in the test process.

    Returns:
        BhixSettings: Settings object
    """

    return BhixSettings(workers=1)


@pytest.fixture
def random_connected_graph(rng) -> Callable[..., Graph]:
    """
    A factory fixture for random connected graphs: a random spanning tree
    with extra edges added independently with probability `p`.

    Returns:
        Callable[..., Graph]: The factory function.
    """

    def _random_connected_graph(n: int, p: float = 0.3) -> Graph:
        order = rng.permutation(n)
        edges = [
            (int(order[i]), int(order[rng.integers(0, i)])) for i in range(1, n)
        ]
        extra = np.triu(rng.random((n, n)) < p, k=1)
        edges.extend((int(u), int(v)) for u, v in zip(*np.nonzero(extra)))
        g = from_edge_list(n, edges)
        assert is_connected(g)
        return g

    return _random_connected_graph
