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
Laplacian spectra, biharmonic and resistance distances, and exact
Laplacian characteristic polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from logging import getLogger
from typing import TYPE_CHECKING, Optional, Tuple

import numpy as np

from .exceptions import Disconnected, NoConvergence, OutOfRangeVertex, TooLarge
from .polynomial import CharPoly, matrix_char_poly
from .settings import settings as default_settings

if TYPE_CHECKING:
    from .graph import Graph
    from .settings import BhixSettings
    from .types import EigenSolver

logger = getLogger(__name__)

JACOBI_MAX_SWEEPS = 100
CHAR_POLY_MAX_N = 64


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Ascending Laplacian eigenvalues `lambda_1 <= ... <= lambda_n`.

    Eigenvalues with absolute value below `tolerance` are clamped to exactly zero;
    `zero_count` equals the number of connected components.
    """

    values: np.ndarray
    zero_count: int
    tolerance: float

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def connected(self) -> bool:
        return self.zero_count == 1

    @property
    def algebraic_connectivity(self) -> float:
        """
        `lambda_2`, or `0.0` for a single vertex.
        """

        return float(self.values[1]) if self.n > 1 else 0.0

    @property
    def spectral_radius(self) -> float:
        return float(self.values[-1])

    @property
    def nonzero(self) -> np.ndarray:
        """
        `lambda_2..lambda_n` of a connected graph.
        """

        return self.values[1:]

    @property
    def spectral_ratio(self) -> float:
        """
        `r_L = lambda_n / lambda_2`.
        """

        return self.spectral_radius / self.algebraic_connectivity

    def power_sum(self, exponent: float) -> float:
        """
        `sum_(i >= 2) lambda_i^exponent`.
        """

        return float(np.sum(self.nonzero**exponent))

    def __repr__(self) -> str:
        return f"Spectrum({np.array2string(self.values, precision=6)})"


def laplacian(g: Graph) -> np.ndarray:
    """
    Laplacian matrix `L = D - A` as an integer array.
    """

    adjacency = g.adjacency.astype(np.int64)
    return np.diag(g.degrees) - adjacency


def jacobi_eigh(
    matrix: np.ndarray,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps over every off-diagonal pair `(p, q)` in row order until the off-diagonal
    Frobenius norm drops below `1e-12 * n`.

    Args:
        matrix (np.ndarray): Real symmetric matrix.
        max_sweeps (int, optional): Sweep cap. Defaults to `100`.

    Raises:
        NoConvergence: The sweep cap was exceeded.

    Returns:
        Tuple of unsorted eigenvalues and the matrix of eigenvectors (as columns)
    """

    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    threshold = 1e-12 * n
    off_norm = 0.0
    for sweep in range(max_sweeps + 1):
        off_norm = float(np.sqrt(2.0 * np.sum(np.triu(a, k=1) ** 2)))
        if off_norm < threshold:
            logger.debug("Jacobi converged after %i sweeps (n=%i)", sweep, n)
            return np.diagonal(a).copy(), v
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    raise NoConvergence(max_sweeps, off_norm)


def _symmetric_eigh(matrix: np.ndarray, method: EigenSolver) -> Tuple[np.ndarray, np.ndarray]:
    if method == "jacobi":
        values, vectors = jacobi_eigh(matrix)
    else:
        values, vectors = np.linalg.eigh(np.asarray(matrix, dtype=np.float64))
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def _clamp(values: np.ndarray, tolerance: float) -> Spectrum:
    values = np.where(np.abs(values) < tolerance, 0.0, values)
    values.setflags(write=False)
    return Spectrum(
        values=values,
        zero_count=int(np.count_nonzero(values == 0.0)),
        tolerance=tolerance,
    )


def eigendecomposition(
    g: Graph,
    method: Optional[EigenSolver] = None,
    settings: Optional[BhixSettings] = None,
) -> Tuple[Spectrum, np.ndarray]:
    """
    Full eigendecomposition of the Laplacian.

    Args:
        g (Graph): Input graph.
        method (Optional[EigenSolver], optional): Eigensolver. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Returns:
        Tuple of the spectrum and the orthonormal eigenvectors as columns, in spectrum order
    """

    settings = settings or default_settings
    method = method or settings.eigensolver
    values, vectors = _symmetric_eigh(laplacian(g), method)
    spectrum = _clamp(values, settings.zero_tolerance)
    logger.debug("%r spectrum (%s): %r", g, method, spectrum)
    return spectrum, vectors


def spectrum(
    g: Graph,
    method: Optional[EigenSolver] = None,
    settings: Optional[BhixSettings] = None,
) -> Spectrum:
    """
    Laplacian spectrum of a graph, in ascending order with near-zero values clamped.

    Args:
        g (Graph): Input graph.
        method (Optional[EigenSolver], optional): Eigensolver. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Returns:
        Spectrum object
    """

    settings = settings or default_settings
    method = method or settings.eigensolver
    if method == "lapack":
        values = np.linalg.eigvalsh(laplacian(g).astype(np.float64))
        return _clamp(np.sort(values), settings.zero_tolerance)
    return eigendecomposition(g, method=method, settings=settings)[0]


def spectra_batch(laplacians: np.ndarray, tolerance: float) -> np.ndarray:
    """
    Ascending eigenvalues of a stack of Laplacians, with near-zero values clamped.

    Args:
        laplacians (np.ndarray): Array of shape `(k, n, n)`.
        tolerance (float): Zero clamp threshold.

    Returns:
        Array of shape `(k, n)`
    """

    values = np.linalg.eigvalsh(laplacians.astype(np.float64))
    return np.where(np.abs(values) < tolerance, 0.0, values)


@dataclass(frozen=True, eq=False)
class BiharmonicMatrix:
    """
    Squared biharmonic distances `d_B^2(u, v)` between every pair of vertices.
    """

    entries: np.ndarray

    def pair_sum(self) -> float:
        """
        Sum over unordered pairs, i.e. half the sum over ordered pairs.
        """

        return float(np.sum(np.triu(self.entries, k=1)))

    def eccentricities(self) -> np.ndarray:
        """
        Biharmonic eccentricity `max_v d_B^2(u, v)` of every vertex `u`.
        """

        return self.entries.max(axis=1)


def _pseudoinverse_distances(g: Graph, power: int, settings: Optional[BhixSettings]) -> np.ndarray:
    spec, vectors = eigendecomposition(g, settings=settings)
    if not spec.connected:
        raise Disconnected(
            f"{g!r} has {spec.zero_count} connected components; "
            "pseudoinverse distances require a connected graph",
        )
    # M = sum_(i >= 2) v_i v_i^T / lambda_i^power
    tail = vectors[:, 1:]
    pinv = (tail / spec.nonzero**power) @ tail.T
    diagonal = np.diagonal(pinv)
    distances = diagonal[:, None] + diagonal[None, :] - 2.0 * pinv
    distances = (distances + distances.T) / 2.0
    np.fill_diagonal(distances, 0.0)
    return np.clip(distances, 0.0, None)


def biharmonic_matrix(g: Graph, settings: Optional[BhixSettings] = None) -> BiharmonicMatrix:
    """
    Squared biharmonic distances, from the Moore-Penrose pseudoinverse of `L^2`.

    `d_B^2(u, v) = M_uu + M_vv - 2 M_uv` where `M = sum_(i >= 2) v_i v_i^T / lambda_i^2`.

    Args:
        g (Graph): Connected graph.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        Disconnected: The graph is not connected.

    Returns:
        Biharmonic distance matrix
    """

    return BiharmonicMatrix(entries=_pseudoinverse_distances(g, 2, settings))


def resistance_matrix(g: Graph, settings: Optional[BhixSettings] = None) -> np.ndarray:
    """
    Effective resistances `R(u, v) = L+_uu + L+_vv - 2 L+_uv`, from the pseudoinverse of `L`.

    Args:
        g (Graph): Connected graph.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        Disconnected: The graph is not connected.

    Returns:
        Symmetric `n x n` array of effective resistances
    """

    return _pseudoinverse_distances(g, 1, settings)


def char_poly(g: Graph) -> CharPoly:
    """
    Exact Laplacian characteristic polynomial `det(xI - L(G))`.

    Args:
        g (Graph): Graph with at most 64 vertices.

    Raises:
        TooLarge: The graph has more than 64 vertices.

    Returns:
        Characteristic polynomial
    """

    if g.n > CHAR_POLY_MAX_N:
        raise TooLarge(
            f"Exact characteristic polynomial of {g!r} exceeds the cap of "
            f"{CHAR_POLY_MAX_N} vertices",
        )
    return matrix_char_poly(laplacian(g))


def _deleted_char_poly(g: Graph, v: int) -> CharPoly:
    lap = laplacian(g)
    keep = [u for u in range(g.n) if u != v]
    return matrix_char_poly(lap[np.ix_(keep, keep)])


def char_poly_cut_edge(g1: Graph, u: int, g2: Graph, v: int) -> CharPoly:
    """
    Laplacian characteristic polynomial of the graph formed by joining `u` in `g1`
    to `v` in `g2` with a single (cut) edge, computed from the two components:

    `phi(G) = phi(G1) phi(G2) - phi(G1) phi(L_v(G2)) - phi(L_u(G1)) phi(G2)`,

    where `L_w` deletes the row and column of `w`.

    Args:
        g1 (Graph): First component.
        u (int): Endpoint of the cut edge in `g1`.
        g2 (Graph): Second component.
        v (int): Endpoint of the cut edge in `g2`.

    Raises:
        OutOfRangeVertex: An endpoint does not belong to its component.

    Returns:
        Characteristic polynomial of the assembled graph
    """

    if not 0 <= u < g1.n:
        raise OutOfRangeVertex(u, g1.n)
    if not 0 <= v < g2.n:
        raise OutOfRangeVertex(v, g2.n)
    if g1.n + g2.n > CHAR_POLY_MAX_N:
        raise TooLarge(
            f"Assembled graph on {g1.n + g2.n} vertices exceeds the cap of {CHAR_POLY_MAX_N}",
        )
    phi1 = char_poly(g1)
    phi2 = char_poly(g2)
    result = phi1 * phi2 - phi1 * _deleted_char_poly(g2, v) - _deleted_char_poly(g1, u) * phi2
    return CharPoly(result.coeffs)
