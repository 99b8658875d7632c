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
Test the parametric graph families.
"""

from __future__ import annotations

import pytest

from bhix.exceptions import InvalidParams
from bhix.families import (
    FamilyKind,
    FamilySpec,
    double_star_params,
    family,
    firefly_params,
    generate,
)
from bhix.graph import is_connected, triangle_count


@pytest.mark.parametrize(
    "params",
    [
        {"kind": "star", "n": 1},
        {"kind": "star", "n": 7},
        {"kind": "path", "n": 9},
        {"kind": "complete", "n": 6},
        {"kind": "cycle", "n": 5},
        {"kind": "empty", "n": 4},
        {"kind": "double-star", "a": 1, "b": 1},
        {"kind": "double-star", "a": 3, "b": 5},
        {"kind": "firefly", "s": 0, "t": 0, "q": 0},
        {"kind": "firefly", "s": 2, "t": 3, "q": 1},
        {"kind": "firefly", "s": 4, "t": 0, "n": 9},
    ],
)
def test_expected_edge_count(params) -> None:
    """
    Check that every generated family member has its closed-form edge count.
    """

    spec = FamilySpec.create(**params)
    g = generate(spec)
    assert g.n == spec.order
    assert g.m == spec.expected_edge_count()


def test_firefly_order_from_n() -> None:
    """
    Check that the number of pendant edges is derived from the order.
    """

    spec = FamilySpec(kind=FamilyKind.firefly, s=1, t=1, n=7)
    assert spec.q == 2
    assert spec.label() == "F(1,1,2)"


def test_firefly_structure() -> None:
    """
    Check that a firefly is connected, has `s` triangles and a centre adjacent to
    every triangle vertex, path and pendant edge.
    """

    g = family("firefly", s=3, t=2, q=4)
    assert is_connected(g)
    assert triangle_count(g) == 3
    assert g.degree(0) == 2 * 3 + 2 + 4
    assert g.max_degree == g.degree(0)


def test_double_star_order() -> None:
    """
    Check that the order of a double star is derived from its parameters.
    """

    spec = FamilySpec.create(kind="double-star", a=2, b=4)
    assert spec.order == 8
    assert spec.label() == "S(2,4)"


@pytest.mark.parametrize(
    "params",
    [
        {"kind": "star", "n": 0},
        {"kind": "path"},
        {"kind": "cycle", "n": 2},
        {"kind": "double-star", "a": 0, "b": 3},
        {"kind": "double-star", "a": 1},
        {"kind": "double-star", "a": 1, "b": 1, "n": 5},
        {"kind": "firefly", "s": 1},
        {"kind": "firefly", "s": 2, "t": 2, "n": 8},
        {"kind": "firefly", "s": 1, "t": 0, "q": 0, "n": 4},
        {"kind": "wheel", "n": 5},
    ],
)
def test_invalid_params(params) -> None:
    """
    Check that invalid family parameters raise `InvalidParams`.
    """

    with pytest.raises(InvalidParams):
        FamilySpec.create(**params)


@pytest.mark.parametrize("n", [4, 7, 10])
def test_double_star_params(n) -> None:
    """
    Check that every unordered double star of order `n` is listed once.
    """

    params = double_star_params(n)
    assert len(params) == (n - 2) // 2
    assert all(p["a"] <= p["b"] and p["a"] + p["b"] == n - 2 for p in params)


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_firefly_params(n) -> None:
    """
    Check that every listed firefly parameter triple has order `n`.
    """

    for params in firefly_params(n):
        assert FamilySpec(kind=FamilyKind.firefly, **params).order == n
