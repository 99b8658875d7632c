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
Graph text formats: graph6 (short form) and edge lists.
"""

from __future__ import annotations

from logging import getLogger
from typing import TYPE_CHECKING, List, Tuple

import numpy as np

from .exceptions import (
    EdgeListError,
    GraphError,
    InvalidGraph6Character,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBits,
)
from .graph import Graph, from_edge_list

if TYPE_CHECKING:
    from pathlib import Path

logger = getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_OFFSET = 63
GRAPH6_MAX_CHAR = 126
GRAPH6_SHORT_MAX_N = 62
GRAPH6_SUFFIXES = (".g6", ".graph6")


def upper_triangle_indices(n: int) -> Tuple[np.ndarray, np.ndarray]:
    # graph6 stores x(i, j) for i < j in column order: x(0,1) x(0,2) x(1,2) x(0,3) ...
    rows, cols = np.triu_indices(n, k=1)
    order = np.lexsort((rows, cols))
    return rows[order], cols[order]


def parse_graph6(text: str) -> Graph:
    """
    Decode a graph6 line (short form only, `n < 63`).

    The optional `>>graph6<<` header and surrounding whitespace are ignored.

    Args:
        text (str): graph6 string.

    Raises:
        MalformedHeader: The size byte is missing, out of range, or uses the long form.
        InvalidGraph6Character: A body character lies outside `63..126`.
        TruncatedBits: The body is too short for `n`.
        TrailingGarbage: The body is too long for `n`, or a padding bit is set.

    Returns:
        Decoded graph
    """

    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise MalformedHeader("Empty graph6 string")
    header = ord(line[0])
    if header == GRAPH6_MAX_CHAR:
        raise MalformedHeader(
            f"Long-form graph6 header in {text!r} is not supported "
            f"(at most {GRAPH6_SHORT_MAX_N} vertices)",
        )
    if not GRAPH6_OFFSET <= header < GRAPH6_MAX_CHAR:
        raise MalformedHeader(f"Invalid graph6 size character {line[0]!r} in {text!r}")
    n = header - GRAPH6_OFFSET
    if n < 1:
        raise MalformedHeader(f"graph6 string {text!r} describes a graph with no vertices")
    body = line[1:]
    for char in body:
        if not GRAPH6_OFFSET <= ord(char) <= GRAPH6_MAX_CHAR:
            raise InvalidGraph6Character(f"Invalid graph6 character {char!r} in {text!r}")
    bit_count = n * (n - 1) // 2
    expected_length = -(-bit_count // 6)
    if len(body) < expected_length:
        raise TruncatedBits(
            f"graph6 string {text!r} has {len(body)} body characters, "
            f"expected {expected_length} for n={n}",
        )
    if len(body) > expected_length:
        raise TrailingGarbage(
            f"graph6 string {text!r} has {len(body) - expected_length} "
            f"trailing characters for n={n}",
        )
    chunks = np.frombuffer(body.encode("ascii"), dtype=np.uint8) - GRAPH6_OFFSET
    bits = np.unpackbits(chunks[:, None], axis=1)[:, 2:].reshape(-1)
    if bits[bit_count:].any():
        raise TrailingGarbage(f"graph6 string {text!r} has non-zero padding bits")
    adjacency = np.zeros((n, n), dtype=bool)
    rows, cols = upper_triangle_indices(n)
    adjacency[rows, cols] = bits[:bit_count].astype(bool)
    adjacency |= adjacency.T
    return Graph(adjacency)


def encode_graph6(g: Graph) -> str:
    """
    Encode a graph as a graph6 string (short form, without header).

    Args:
        g (Graph): Graph with at most 62 vertices.

    Returns:
        graph6 string
    """

    if g.n > GRAPH6_SHORT_MAX_N:
        raise GraphError(
            f"{g!r} has too many vertices for the short graph6 form "
            f"(at most {GRAPH6_SHORT_MAX_N})",
        )
    rows, cols = upper_triangle_indices(g.n)
    bits = g.adjacency[rows, cols].astype(np.uint8)
    padding = (-bits.size) % 6
    bits = np.concatenate([bits, np.zeros(padding, dtype=np.uint8)]).reshape(-1, 6)
    values = bits @ (1 << np.arange(5, -1, -1, dtype=np.uint8)) + GRAPH6_OFFSET
    return chr(g.n + GRAPH6_OFFSET) + "".join(chr(int(v)) for v in values)


def read_edge_list(text: str) -> Graph:
    """
    Parse the edge-list text format.

    The first line holds `n m`, followed by `m` lines of `u v`.
    Blank lines and lines starting with `#` are ignored.

    Args:
        text (str): Edge-list text.

    Raises:
        EdgeListError: The text does not follow the format.

    Returns:
        Parsed graph
    """

    lines = [
        line.split()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise EdgeListError("Empty edge list")
    try:
        header = [int(token) for token in lines[0]]
        edges: List[Tuple[int, int]] = []
        for lineno, tokens in enumerate(lines[1:], start=2):
            if len(tokens) != 2:
                raise EdgeListError(
                    f"Edge line {lineno} must hold exactly two vertices, got {tokens}",
                )
            edges.append((int(tokens[0]), int(tokens[1])))
    except ValueError as err:
        raise EdgeListError(f"Non-integer token in edge list: {err}") from err
    if len(header) != 2:
        raise EdgeListError(f"Edge list header must be 'n m', got {lines[0]}")
    n, m = header
    if m != len(edges):
        raise EdgeListError(f"Edge list header declares {m} edges, found {len(edges)}")
    try:
        return from_edge_list(n, edges)
    except GraphError as err:
        raise EdgeListError(f"Invalid edge list: {err}") from err


def write_edge_list(g: Graph) -> str:
    """
    Render a graph in the edge-list text format.
    """

    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]) + "\n"


def read_graph_file(path: Path) -> Graph:
    """
    Read a graph from a file: graph6 (first non-empty line) if the suffix is
    `.g6` or `.graph6`, otherwise an edge list.
    """

    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() in GRAPH6_SUFFIXES:
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise MalformedHeader(f"graph6 file '{path}' is empty")
        return parse_graph6(lines[0])
    return read_edge_list(text)
