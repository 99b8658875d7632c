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
Test the exact integer polynomials and the Laplacian characteristic polynomial.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from bhix.exceptions import OutOfRangeVertex, TooLarge
from bhix.families import family
from bhix.graph import Graph, from_edge_list
from bhix.indices import spanning_tree_count
from bhix.operations import bridge
from bhix.polynomial import CharPoly, IntPoly, matrix_char_poly
from bhix.spectra import char_poly, char_poly_cut_edge


def test_int_poly_arithmetic() -> None:
    """
    Check polynomial products, powers and evaluation.
    """

    x = IntPoly.x()
    p = (x - 1) ** 2 * (x - 4) * x
    assert p == IntPoly([0, -4, 9, -6, 1])
    assert p.degree == 4
    assert p(4) == 0
    assert p(Fraction(1, 2)) == Fraction(1, 2) * Fraction(1, 4) * Fraction(-7, 2)
    assert str(p) == "x^4 - 6x^3 + 9x^2 - 4x"


def test_divmod_monic() -> None:
    """
    Check exact division by a monic polynomial.
    """

    x = IntPoly.x()
    quotient, remainder = ((x - 3) * (x**2 + 1) + 5).divmod_monic(x - 3)
    assert quotient == x**2 + 1
    assert remainder == 5


def test_reciprocal_root_sums() -> None:
    """
    Check the sums of `1/r` and `1/r^2` over the roots of `(x - 1)(x - 2)(x - 4)`.
    """

    p = IntPoly.linear(1) * IntPoly.linear(2) * IntPoly.linear(4)
    assert p.reciprocal_root_sums() == (Fraction(7, 4), Fraction(21, 16))
    with pytest.raises(ZeroDivisionError):
        (p * IntPoly.x()).reciprocal_root_sums()
    assert (p * IntPoly.x() ** 3).strip_zero_roots() == p


def test_char_poly_star() -> None:
    """
    Check the characteristic polynomial of the star on 4 vertices.
    """

    phi = char_poly(family("star", n=4))
    assert isinstance(phi, CharPoly)
    assert phi == IntPoly([0, -4, 9, -6, 1])


@pytest.mark.parametrize("n", [3, 6, 11, 20])
def test_char_poly_roots(random_connected_graph, n) -> None:
    """
    Check that the characteristic polynomial is monic with constant term zero,
    and that its second coefficient is minus twice the edge count.
    """

    g = random_connected_graph(n)
    phi = char_poly(g)
    assert phi.degree == n
    assert phi.leading == 1
    assert phi.coefficient(0) == 0
    assert phi.coefficient(n - 1) == -2 * g.m


@pytest.mark.parametrize(
    "g",
    [
        family("star", n=4),
        family("complete", n=4),
        family("cycle", n=6),
        family("firefly", s=2, t=1, q=1),
        family("double-star", a=2, b=3),
    ],
)
def test_matrix_tree_value(g) -> None:
    """
    Check that `(-1)^(n-1) c_1 = n tau(G)`.
    """

    assert char_poly(g).matrix_tree_value() == g.n * spanning_tree_count(g)


@pytest.mark.parametrize("n", [2, 7, 12, 18, 24, 30])
def test_matrix_tree_value_random(random_connected_graph, rng, n) -> None:
    """
    Check `(-1)^(n-1) c_1 = n tau(G)` on random connected graphs of up to 30 vertices.
    """

    for _ in range(3):
        g = random_connected_graph(n, p=float(rng.uniform(0.05, 0.5)))
        assert char_poly(g).matrix_tree_value() == g.n * spanning_tree_count(g)


def test_matrix_char_poly_empty() -> None:
    """
    Check that the empty matrix has characteristic polynomial `1`.
    """

    assert matrix_char_poly([]) == 1


def test_char_poly_too_large() -> None:
    """
    Check that the exact characteristic polynomial is capped at 64 vertices.
    """

    with pytest.raises(TooLarge):
        char_poly(Graph.empty(65))


@pytest.mark.parametrize(("u", "v"), [(0, 0), (1, 2), (3, 4)])
def test_char_poly_cut_edge(u, v) -> None:
    """
    Check the cut edge formula against the characteristic polynomial of the assembled graph.
    """

    g1 = family("firefly", s=1, t=1, q=0)
    g2 = family("cycle", n=5)
    assert char_poly_cut_edge(g1, u, g2, v) == char_poly(bridge(g1, u, g2, v))


def test_char_poly_cut_edge_random(random_connected_graph, rng) -> None:
    """
    Check the cut edge formula on 200 random assemblies of connected graphs
    with up to 8 vertices each, joined at random endpoints.
    """

    for _ in range(200):
        g1 = random_connected_graph(int(rng.integers(1, 9)), p=float(rng.uniform(0, 0.6)))
        g2 = random_connected_graph(int(rng.integers(1, 9)), p=float(rng.uniform(0, 0.6)))
        u = int(rng.integers(0, g1.n))
        v = int(rng.integers(0, g2.n))
        assert char_poly_cut_edge(g1, u, g2, v) == char_poly(bridge(g1, u, g2, v))


def test_char_poly_cut_edge_out_of_range() -> None:
    """
    Check that cut edge endpoints must belong to their components.
    """

    with pytest.raises(OutOfRangeVertex):
        char_poly_cut_edge(from_edge_list(2, [(0, 1)]), 2, from_edge_list(2, [(0, 1)]), 0)
