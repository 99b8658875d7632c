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
Graph operations with closed-form Laplacian spectra: complement, join,
Cartesian product and lexicographic product.

Each operation can be constructed explicitly, or its biharmonic index predicted from
the spectra (and, for the lexicographic product, the degrees) of its operands.
"""

from __future__ import annotations

from logging import getLogger
from typing import TYPE_CHECKING, Optional

import numpy as np

from pydantic import BaseModel, ConfigDict

from .exceptions import DisconnectedResult, InvalidInput, OutOfRangeVertex
from .formats import GRAPH6_SHORT_MAX_N, encode_graph6
from .graph import Graph
from .indices import bh_from_spectrum
from .settings import settings as default_settings
from .spectra import spectrum
from .types import BaseEnum

if TYPE_CHECKING:
    from .settings import BhixSettings

logger = getLogger(__name__)


class OpKind(BaseEnum):
    complement = "complement"
    join = "join"
    cartesian = "cartesian"
    lexicographic = "lexicographic"

    @property
    def binary(self) -> bool:
        return self != OpKind.complement


def complement(g: Graph) -> Graph:
    adjacency = ~g.adjacency
    np.fill_diagonal(adjacency, False)
    return Graph(adjacency)


def join(g1: Graph, g2: Graph) -> Graph:
    """
    Disjoint union of `g1` and `g2` plus every edge between them.
    Vertices of `g2` are numbered after those of `g1`.
    """

    adjacency = disjoint_union(g1, g2).adjacency.copy()
    adjacency[: g1.n, g1.n :] = True
    adjacency[g1.n :, : g1.n] = True
    return Graph(adjacency)


def cartesian(g1: Graph, g2: Graph) -> Graph:
    """
    Cartesian product; vertex `(i, j)` is numbered `i * n2 + j`.
    """

    a1 = g1.adjacency.astype(np.int8)
    a2 = g2.adjacency.astype(np.int8)
    adjacency = np.kron(a1, np.identity(g2.n, dtype=np.int8)) + np.kron(
        np.identity(g1.n, dtype=np.int8),
        a2,
    )
    return Graph(adjacency > 0)


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    """
    Lexicographic product `G1[G2]`: `(i, j) ~ (k, l)` iff `i ~ k` in `g1`,
    or `i = k` and `j ~ l` in `g2`. Vertex `(i, j)` is numbered `i * n2 + j`.
    """

    a1 = g1.adjacency.astype(np.int8)
    a2 = g2.adjacency.astype(np.int8)
    adjacency = np.kron(a1, np.ones((g2.n, g2.n), dtype=np.int8)) + np.kron(
        np.identity(g1.n, dtype=np.int8),
        a2,
    )
    return Graph(adjacency > 0)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    adjacency = np.zeros((n, n), dtype=bool)
    adjacency[: g1.n, : g1.n] = g1.adjacency
    adjacency[g1.n :, g1.n :] = g2.adjacency
    return Graph(adjacency)


def bridge(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """
    Join vertex `u` of `g1` to vertex `v` of `g2` by a single cut edge.
    The characteristic polynomial of the result is given by `char_poly_cut_edge`.
    """

    if not 0 <= u < g1.n:
        raise OutOfRangeVertex(u, g1.n)
    if not 0 <= v < g2.n:
        raise OutOfRangeVertex(v, g2.n)
    adjacency = disjoint_union(g1, g2).adjacency.copy()
    adjacency[u, g1.n + v] = adjacency[g1.n + v, u] = True
    return Graph(adjacency)


def _operands(op: OpKind, g1: Graph, g2: Optional[Graph]) -> Graph:
    if op.binary and g2 is None:
        raise InvalidInput(f"Operation '{op}' needs two operand graphs")
    if not op.binary and g2 is not None:
        raise InvalidInput(f"Operation '{op}' takes a single operand graph")
    return g2  # type: ignore[return-value]


def construct(op: OpKind, g1: Graph, g2: Optional[Graph] = None) -> Graph:
    """
    Build the result of a graph operation explicitly.
    """

    other = _operands(op, g1, g2)
    if op == OpKind.complement:
        return complement(g1)
    if op == OpKind.join:
        return join(g1, other)
    if op == OpKind.cartesian:
        return cartesian(g1, other)
    return lexicographic(g1, other)


def predicted_spectrum(
    op: OpKind,
    g1: Graph,
    g2: Optional[Graph] = None,
    settings: Optional[BhixSettings] = None,
) -> np.ndarray:
    """
    Laplacian spectrum of the result of an operation, from the operands alone.

    * complement: `0` and `n - lambda_i(G)` for `i >= 2`.
    * join: `0`, `n1 + n2`, `lambda_i(G1) + n2` and `lambda_j(G2) + n1` for `i, j >= 2`.
    * Cartesian product: `lambda_i(G1) + lambda_j(G2)` for all `i, j`.
    * lexicographic product: `n2 lambda_i(G1)` for all `i`, and
      `lambda_j(G2) + n2 d_i(G1)` for every vertex `i` of `G1` and `j >= 2`.

    Returns:
        Eigenvalues in ascending order
    """

    other = _operands(op, g1, g2)
    settings = settings or default_settings
    s1 = spectrum(g1, settings=settings).values
    if op == OpKind.complement:
        values = np.concatenate([[0.0], g1.n - s1[1:]])
    else:
        s2 = spectrum(other, settings=settings).values
        n1, n2 = g1.n, other.n
        if op == OpKind.join:
            values = np.concatenate([[0.0, n1 + n2], s1[1:] + n2, s2[1:] + n1])
        elif op == OpKind.cartesian:
            values = np.add.outer(s1, s2).ravel()
        else:
            values = np.concatenate(
                [n2 * s1, np.add.outer(n2 * g1.degrees.astype(np.float64), s2[1:]).ravel()],
            )
    values = np.sort(values)
    return np.where(np.abs(values) < settings.zero_tolerance, 0.0, values)


def _inverse_square_sum(values: np.ndarray) -> float:
    return float(np.sum(1.0 / np.asarray(values, dtype=np.float64) ** 2))


def predicted_bh(
    op: OpKind,
    g1: Graph,
    g2: Optional[Graph] = None,
    settings: Optional[BhixSettings] = None,
) -> float:
    """
    Biharmonic index of the result of an operation, from the operand spectra.

    Args:
        op (OpKind): Graph operation.
        g1 (Graph): First operand.
        g2 (Optional[Graph], optional): Second operand of binary operations.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        InvalidInput: Wrong number of operands.
        DisconnectedResult: The result of the operation is disconnected.

    Returns:
        Predicted biharmonic index
    """

    other = _operands(op, g1, g2)
    settings = settings or default_settings
    tolerance = settings.zero_tolerance
    s1 = spectrum(g1, settings=settings)
    n1 = g1.n
    if op == OpKind.complement:
        if n1 > 1 and s1.spectral_radius >= n1 - tolerance:
            raise DisconnectedResult(
                f"The complement of {g1!r} is disconnected (lambda_n = {s1.spectral_radius:.12g})",
            )
        return n1 * _inverse_square_sum(n1 - s1.values[1:])
    s2 = spectrum(other, settings=settings)
    n2 = other.n
    n = n1 * n2
    if op == OpKind.join:
        n = n1 + n2
        return n * (
            1.0 / n**2
            + _inverse_square_sum(s1.values[1:] + n2)
            + _inverse_square_sum(s2.values[1:] + n1)
        )
    if op == OpKind.cartesian:
        if not (s1.connected and s2.connected):
            raise DisconnectedResult(
                f"The Cartesian product of {g1!r} and {other!r} is disconnected",
            )
        cross = np.add.outer(s1.values[1:], s2.values[1:])
        return n * (
            _inverse_square_sum(s1.values[1:])
            + _inverse_square_sum(s2.values[1:])
            + _inverse_square_sum(cross)
        )
    if not s1.connected or (n1 == 1 and not s2.connected):
        raise DisconnectedResult(
            f"The lexicographic product of {g1!r} and {other!r} is disconnected",
        )
    shifted = np.add.outer(n2 * g1.degrees.astype(np.float64), s2.values[1:])
    return n * (_inverse_square_sum(n2 * s1.values[1:]) + _inverse_square_sum(shifted))


class ProductReport(BaseModel):
    """
    A graph operation applied explicitly, compared with its spectral prediction.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    op: OpKind
    n: int
    m: int
    graph6: Optional[str] = None
    """
    The constructed graph, when small enough for the short graph6 form.
    """

    predicted_bh: float
    direct_bh: float
    bh_agrees: bool
    spectrum_max_error: float
    """
    Largest absolute difference between the predicted and computed spectra.
    """


def product_report(
    op: OpKind,
    g1: Graph,
    g2: Optional[Graph] = None,
    settings: Optional[BhixSettings] = None,
) -> ProductReport:
    """
    Construct the result of an operation and compare its biharmonic index and spectrum
    with the values predicted from the operands.

    Raises:
        InvalidInput: Wrong number of operands.
        DisconnectedResult: The result of the operation is disconnected.
    """

    settings = settings or default_settings
    predicted = predicted_bh(op, g1, g2, settings=settings)
    result = construct(op, g1, g2)
    computed = spectrum(result, settings=settings)
    direct = bh_from_spectrum(computed)
    error = float(np.max(np.abs(predicted_spectrum(op, g1, g2, settings) - computed.values)))
    report = ProductReport(
        op=op,
        n=result.n,
        m=result.m,
        graph6=encode_graph6(result) if result.n <= GRAPH6_SHORT_MAX_N else None,
        predicted_bh=predicted,
        direct_bh=direct,
        bh_agrees=abs(predicted - direct) <= settings.tolerance * max(1.0, abs(direct)),
        spectrum_max_error=error,
    )
    if not report.bh_agrees:
        logger.error(
            "%s of %r and %r: predicted BH %.12g, direct %.12g",
            op,
            g1,
            g2,
            predicted,
            direct,
        )
    return report
