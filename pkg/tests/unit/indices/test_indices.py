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
Test the biharmonic, Kirchhoff and degree-based indices.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from bhix.exceptions import Disconnected
from bhix.extremal.trees import enumerate_trees
from bhix.families import family
from bhix.graph import from_edge_list
from bhix.indices import (
    IndexName,
    bareiss_determinant,
    biharmonic_eccentricities,
    biharmonic_index,
    exact_indices,
    generalized_bh,
    index_report,
    kirchhoff_index,
    kirchhoff_resistance_sum,
    spanning_tree_count,
    wiener_index,
    zagreb_forgotten,
)


def test_star_indices() -> None:
    """
    Check every index of the star on 4 vertices.
    """

    g = family("star", n=4)
    report = index_report(g)
    assert report.connected
    assert report.bh_spectral == pytest.approx(8.25)
    assert report.bh_distance == pytest.approx(8.25)
    assert report.kirchhoff == pytest.approx(9.0)
    assert report.wiener == 9
    assert (report.zagreb_m1, report.forgotten_f) == (12, 30)
    assert report.triangles == 0
    assert report.tau == 1
    assert report.spectral_ratio == pytest.approx(4.0)
    assert report.routes_agree()


@pytest.mark.parametrize(
    ("kind", "params", "bh", "kf"),
    [
        ("star", {"n": 4}, Fraction(33, 4), Fraction(9)),
        ("path", {"n": 4}, Fraction(13), Fraction(10)),
        ("complete", {"n": 3}, Fraction(2, 3), Fraction(2)),
        ("complete", {"n": 4}, Fraction(3, 4), Fraction(3)),
        ("cycle", {"n": 4}, Fraction(9, 4), Fraction(5)),
        ("path", {"n": 1}, Fraction(0), Fraction(0)),
    ],
)
def test_exact_indices(kind, params, bh, kf) -> None:
    """
    Check the exact rational indices of small graphs.
    """

    assert exact_indices(family(kind, **params)) == (bh, kf)


@pytest.mark.parametrize("n", range(2, 51))
def test_complete_graph_bh(n) -> None:
    """
    Check that both definitions give `BH(K_n) = (n - 1) / n`.
    """

    bh = biharmonic_index(family("complete", n=n))
    assert bh.spectral == pytest.approx((n - 1) / n, rel=1e-9)
    assert bh.distance_sum == pytest.approx((n - 1) / n, rel=1e-9)


@pytest.mark.parametrize("n", [5, 9, 14])
def test_exact_indices_match_spectral(random_connected_graph, n) -> None:
    """
    Check that the exact indices agree with the floating point ones.
    """

    g = random_connected_graph(n)
    bh, kf = exact_indices(g)
    assert float(bh) == pytest.approx(biharmonic_index(g).spectral)
    assert float(kf) == pytest.approx(kirchhoff_index(g))


def test_exact_indices_disconnected() -> None:
    """
    Check that the exact indices are rejected on disconnected graphs.
    """

    with pytest.raises(Disconnected):
        exact_indices(from_edge_list(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("n", [4, 7, 9])
def test_kirchhoff_equals_wiener_on_trees(n) -> None:
    """
    Check that the Kirchhoff index of every tree equals its Wiener index.
    """

    for g in enumerate_trees(n):
        assert kirchhoff_index(g) == pytest.approx(wiener_index(g))


@pytest.mark.parametrize("n", [6, 12, 20])
def test_index_routes_agree(random_connected_graph, n) -> None:
    """
    Check that the spectral and distance-sum routes agree, for the biharmonic index
    as well as the Kirchhoff index.
    """

    g = random_connected_graph(n)
    bh = biharmonic_index(g)
    assert bh.distance_sum == pytest.approx(bh.spectral, rel=1e-8)
    assert kirchhoff_resistance_sum(g) == pytest.approx(kirchhoff_index(g), rel=1e-8)


def test_disconnected_index_report() -> None:
    """
    Check that a disconnected graph gets a partial report.
    """

    report = index_report(from_edge_list(5, [(0, 1), (1, 2), (3, 4)]))
    assert not report.connected
    assert report.bh_spectral is None
    assert report.kirchhoff is None
    assert report.wiener is None
    assert report.tau == 0
    assert report.zagreb_m1 == 1 + 4 + 1 + 1 + 1
    assert not report.routes_agree()


def test_disconnected_index_requested() -> None:
    """
    Check that explicitly requesting a connectivity-requiring index of a disconnected
    graph is an error, while degree-based indices can still be requested.
    """

    g = from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        index_report(g, include=[IndexName.bh_spectral])
    assert index_report(g, include=[IndexName.tau, IndexName.triangles]).tau == 0


def test_biharmonic_index_disconnected() -> None:
    """
    Check that the biharmonic index is rejected on disconnected graphs.
    """

    with pytest.raises(Disconnected):
        biharmonic_index(from_edge_list(3, [(0, 1)]))


@pytest.mark.parametrize(
    ("kind", "params", "expected"),
    [
        ("complete", {"n": 4}, 16),
        ("complete", {"n": 6}, 6**4),
        ("cycle", {"n": 7}, 7),
        ("firefly", {"s": 3, "t": 2, "q": 1}, 27),
        ("empty", {"n": 3}, 0),
    ],
)
def test_spanning_tree_count(kind, params, expected) -> None:
    """
    Check the spanning tree count against Cayley's formula and small families.
    """

    assert spanning_tree_count(family(kind, **params)) == expected


@pytest.mark.parametrize(
    ("matrix", "expected"),
    [
        ([[2, 1], [1, 2]], 3),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[0, 2, 1], [3, 0, 0], [1, 1, 5]], -27),
        ([], 1),
    ],
)
def test_bareiss_determinant(matrix, expected) -> None:
    """
    Check the fraction-free determinant on small integer matrices.
    """

    assert bareiss_determinant(matrix) == expected


def test_zagreb_forgotten() -> None:
    """
    Check the first Zagreb and forgotten indices of a double star.
    """

    # degrees 3, 4 and five leaves
    assert zagreb_forgotten(family("double-star", a=2, b=3)) == (9 + 16 + 5, 27 + 64 + 5)


def test_wiener_disconnected() -> None:
    """
    Check that the Wiener index is rejected on disconnected graphs.
    """

    with pytest.raises(Disconnected):
        wiener_index(from_edge_list(3, [(0, 1)]))


def test_generalized_complete() -> None:
    """
    Check the weighted indices of a complete graph, where every squared biharmonic
    distance is `2 / n^2` and every degree is `n - 1`.
    """

    n = 5
    g = family("complete", n=n)
    pairs = n * (n - 1) // 2
    distance = 2 / n**2
    generalized = generalized_bh(g)
    assert generalized.sbi == pytest.approx(pairs * 2 * (n - 1) * distance)
    assert generalized.gbi == pytest.approx(pairs * (n - 1) ** 2 * distance)
    assert generalized.xi_b == pytest.approx(pairs * 2 * distance**2)
    assert generalized.xi_b_star == pytest.approx(pairs * distance**3)
    assert np.allclose(biharmonic_eccentricities(g), distance)
