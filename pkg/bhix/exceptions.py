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
bhix exception classes.
"""

from __future__ import annotations


class BhixError(Exception):
    """
    bhix exception base class.
    """

    pass


class GraphError(BhixError):
    """
    Error raised when a graph cannot be constructed from the given data.
    """

    pass


class OutOfRangeVertex(GraphError):
    """
    A vertex index lies outside `[0, n)`.
    """

    def __init__(self, vertex: int, n: int) -> None:
        self.vertex = vertex
        self.n = n
        super().__init__(f"Vertex {vertex} is out of range for a graph on {n} vertices")


class SelfLoop(GraphError):
    """
    An edge joins a vertex to itself.
    """

    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"Self-loop on vertex {vertex} is not allowed in a simple graph")


class GraphTooLarge(GraphError):
    """
    The requested vertex count exceeds the dense adjacency cap.
    """

    pass


class ParseError(BhixError):
    """
    Base class for graph text format parsing errors.
    """

    pass


class Graph6Error(ParseError):
    """
    graph6 decoding exception base class.
    """

    pass


class MalformedHeader(Graph6Error):
    """
    The graph6 size header is missing, uses the long form, or is out of range.
    """

    pass


class TruncatedBits(Graph6Error):
    """
    The graph6 body ends before every adjacency bit has been read.
    """

    pass


class TrailingGarbage(Graph6Error):
    """
    The graph6 body has more characters than the header allows,
    or its padding bits are not zero.
    """

    pass


class InvalidGraph6Character(Graph6Error):
    """
    A graph6 body character lies outside the printable range `63..126`.
    """

    pass


class EdgeListError(ParseError):
    """
    The edge-list text is not in the `n m` + `u v` lines format.
    """

    pass


class InvalidParams(BhixError):
    """
    Family parameters violate the family's invariants.
    """

    pass


class UnsupportedFamily(BhixError):
    """
    The family has no closed-form biharmonic index.
    """

    pass


class Disconnected(BhixError):
    """
    The operation is only defined on connected graphs.
    """

    pass


class DisconnectedResult(BhixError):
    """
    A graph operation would produce a disconnected graph.
    """

    pass


class InvalidInput(BhixError):
    """
    The inputs of a graph operation are invalid for that operation.
    """

    pass


class TooSmall(BhixError):
    """
    The graph has fewer vertices than the statement requires.
    """

    pass


class TooLarge(BhixError):
    """
    The input exceeds the size supported at desk scale.
    """

    pass


class NonPositiveP(BhixError):
    """
    The exponent `p` of the power-sum lower bound must be positive.
    """

    pass


class NoConvergence(BhixError):
    """
    The Jacobi eigensolver exceeded its sweep cap.

    This indicates a defect rather than an input condition.
    """

    def __init__(self, sweeps: int, off_norm: float) -> None:
        self.sweeps = sweeps
        self.off_norm = off_norm
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e})",
        )
