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
Scalar graph indices: biharmonic, Kirchhoff, Wiener, Zagreb and forgotten indices,
spanning tree counts, and the degree- and eccentricity-weighted biharmonic indices.
"""

from __future__ import annotations

from fractions import Fraction
from logging import getLogger
from typing import TYPE_CHECKING, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict

from .exceptions import Disconnected
from .graph import connected_components, distance_matrix, triangle_count
from .spectra import biharmonic_matrix, char_poly, laplacian, resistance_matrix, spectrum
from .types import BaseEnum

if TYPE_CHECKING:
    from .graph import Graph
    from .settings import BhixSettings
    from .spectra import BiharmonicMatrix, Spectrum

logger = getLogger(__name__)


class BiharmonicIndex(NamedTuple):
    """
    The biharmonic index by its two definitions.
    """

    spectral: float
    """
    `n * sum_(i >= 2) 1 / lambda_i^2`.
    """

    distance_sum: float
    """
    Half the sum of `d_B^2(u, v)` over ordered vertex pairs.
    """


class ZagrebIndices(NamedTuple):
    m1: int
    f: int


class GeneralizedBH(NamedTuple):
    """
    Degree- and eccentricity-weighted biharmonic distance sums.
    """

    sbi: float
    gbi: float
    xi_b: float
    xi_b_star: float


def _require_connected(g: Graph, spec: Spectrum, what: str) -> None:
    if not spec.connected:
        raise Disconnected(
            f"{what} is only defined for connected graphs; "
            f"{g!r} has {spec.zero_count} connected components",
        )


def bh_from_spectrum(spec: Spectrum) -> float:
    """
    `BH = n * sum_(i >= 2) 1 / lambda_i^2` of a connected graph's spectrum.
    """

    return spec.n * float(np.sum(1.0 / spec.nonzero**2))


def kirchhoff_from_spectrum(spec: Spectrum) -> float:
    """
    `Kf = n * sum_(i >= 2) 1 / lambda_i` of a connected graph's spectrum.
    """

    return spec.n * float(np.sum(1.0 / spec.nonzero))


def biharmonic_index(g: Graph, settings: Optional[BhixSettings] = None) -> BiharmonicIndex:
    """
    Biharmonic index, computed both from the spectrum and from the biharmonic distances.

    Args:
        g (Graph): Connected graph.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        Disconnected: The graph is not connected.

    Returns:
        Both values of the biharmonic index
    """

    spec = spectrum(g, settings=settings)
    _require_connected(g, spec, "The biharmonic index")
    return BiharmonicIndex(
        spectral=bh_from_spectrum(spec),
        distance_sum=biharmonic_matrix(g, settings=settings).pair_sum(),
    )


def kirchhoff_index(g: Graph, settings: Optional[BhixSettings] = None) -> float:
    """
    Kirchhoff index `Kf = n * sum_(i >= 2) 1 / lambda_i`.

    Args:
        g (Graph): Connected graph.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        Disconnected: The graph is not connected.

    Returns:
        Kirchhoff index
    """

    spec = spectrum(g, settings=settings)
    _require_connected(g, spec, "The Kirchhoff index")
    return kirchhoff_from_spectrum(spec)


def kirchhoff_resistance_sum(g: Graph, settings: Optional[BhixSettings] = None) -> float:
    """
    Kirchhoff index as the sum of effective resistances over unordered vertex pairs.
    """

    return float(np.sum(np.triu(resistance_matrix(g, settings=settings), k=1)))


def exact_indices(g: Graph) -> Tuple[Fraction, Fraction]:
    """
    Exact rational biharmonic and Kirchhoff indices, from the characteristic polynomial.

    With `phi(x) = x psi(x)`, the nonzero eigenvalues are the roots of `psi`, so
    `BH = n sum 1/r^2` and `Kf = n sum 1/r` follow from its lowest coefficients.

    Raises:
        Disconnected: The graph is not connected.
        TooLarge: The graph exceeds the characteristic polynomial size cap.

    Returns:
        Tuple of the biharmonic and Kirchhoff indices
    """

    reduced = char_poly(g).strip_zero_roots()
    if reduced.degree != g.n - 1:
        raise Disconnected(f"Exact indices are only defined for connected graphs, got {g!r}")
    if g.n == 1:
        return Fraction(0), Fraction(0)
    inverse_sum, inverse_square_sum = reduced.reciprocal_root_sums()
    return g.n * inverse_square_sum, g.n * inverse_sum


def zagreb_forgotten(g: Graph) -> ZagrebIndices:
    """
    First Zagreb index `M1 = sum d(v)^2` and forgotten index `F = sum d(v)^3`.
    """

    degrees = [int(d) for d in g.degrees]
    return ZagrebIndices(m1=sum(d * d for d in degrees), f=sum(d**3 for d in degrees))


def wiener_index(g: Graph) -> int:
    """
    Wiener index: sum of shortest path lengths over unordered vertex pairs.

    Raises:
        Disconnected: The graph is not connected.
    """

    distances = distance_matrix(g)
    if (distances < 0).any():
        raise Disconnected(f"The Wiener index is only defined for connected graphs, got {g!r}")
    return int(np.sum(np.triu(distances, k=1)))


def bareiss_determinant(matrix: Iterable[Iterable[int]]) -> int:
    """
    Exact determinant of an integer matrix by fraction-free Gaussian elimination.
    """

    a: List[List[int]] = [[int(v) for v in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
        previous = pivot
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """
    Number of spanning trees, as the determinant of the Laplacian with
    row and column `0` deleted (`0` for a disconnected graph).
    """

    return bareiss_determinant(laplacian(g)[1:, 1:].tolist())


def _pair_weighted_sum(entries: np.ndarray, weights: np.ndarray) -> float:
    rows, cols = np.triu_indices(entries.shape[0], k=1)
    return float(np.sum(weights[rows, cols] * entries[rows, cols]))


def biharmonic_eccentricities(g: Graph, settings: Optional[BhixSettings] = None) -> np.ndarray:
    """
    Biharmonic eccentricity `max_v d_B^2(u, v)` of every vertex `u`.

    The maximum runs over all vertices; `d_B^2(u, u) = 0` never attains it when `n >= 2`.
    """

    return biharmonic_matrix(g, settings=settings).eccentricities()


def _generalized(g: Graph, distances: BiharmonicMatrix) -> GeneralizedBH:
    entries = distances.entries
    degrees = g.degrees.astype(np.float64)
    ecc = distances.eccentricities()
    return GeneralizedBH(
        sbi=_pair_weighted_sum(entries, degrees[:, None] + degrees[None, :]),
        gbi=_pair_weighted_sum(entries, degrees[:, None] * degrees[None, :]),
        xi_b=_pair_weighted_sum(entries, ecc[:, None] + ecc[None, :]),
        xi_b_star=_pair_weighted_sum(entries, ecc[:, None] * ecc[None, :]),
    )


def generalized_bh(g: Graph, settings: Optional[BhixSettings] = None) -> GeneralizedBH:
    """
    Schultz and Gutman biharmonic indices, and the additive and multiplicative
    eccentric biharmonic distance sums.

    Args:
        g (Graph): Connected graph.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        Disconnected: The graph is not connected.

    Returns:
        The four weighted indices
    """

    return _generalized(g, biharmonic_matrix(g, settings=settings))


class IndexName(BaseEnum):
    """
    Names of the indices that can be requested individually.
    """

    bh_spectral = "bh_spectral"
    bh_distance = "bh_distance"
    kirchhoff = "kirchhoff"
    wiener = "wiener"
    zagreb_m1 = "zagreb_m1"
    forgotten_f = "forgotten_f"
    triangles = "triangles"
    tau = "tau"
    spectral_ratio = "spectral_ratio"
    sbi = "sbi"
    gbi = "gbi"
    xi_b = "xi_b"
    xi_b_star = "xi_b_star"

    @property
    def requires_connected(self) -> bool:
        return self not in (
            IndexName.zagreb_m1,
            IndexName.forgotten_f,
            IndexName.triangles,
            IndexName.tau,
        )


class IndexReport(BaseModel):
    """
    Every scalar index of one graph.

    Fields that are only defined for connected graphs are `None` on disconnected inputs.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    n: int
    m: int
    connected: bool
    bh_spectral: Optional[float] = None
    """
    `n * sum_(i >= 2) 1 / lambda_i^2`.
    """

    bh_distance: Optional[float] = None
    """
    Half the sum of squared biharmonic distances over ordered vertex pairs.
    """

    kirchhoff: Optional[float] = None
    wiener: Optional[int] = None
    zagreb_m1: int
    forgotten_f: int
    triangles: int
    tau: int
    """
    Number of spanning trees (exact).
    """

    spectral_ratio: Optional[float] = None
    """
    `r_L = lambda_n / lambda_2`.
    """

    algebraic_connectivity: float
    spectral_radius: float
    sbi: Optional[float] = None
    gbi: Optional[float] = None
    xi_b: Optional[float] = None
    xi_b_star: Optional[float] = None

    def routes_agree(self, tolerance: float = 1e-8) -> bool:
        """
        Whether the spectral and distance-sum biharmonic indices agree to a relative tolerance.
        """

        if self.bh_spectral is None or self.bh_distance is None:
            return False
        return abs(self.bh_spectral - self.bh_distance) <= tolerance * max(1.0, self.bh_spectral)


def index_report(
    g: Graph,
    settings: Optional[BhixSettings] = None,
    include: Optional[Sequence[IndexName]] = None,
) -> IndexReport:
    """
    Compute every index of a graph.

    Args:
        g (Graph): Input graph.
        settings (Optional[BhixSettings], optional): Numerical settings.
        include (Optional[Sequence[IndexName]], optional): Restrict the connectivity-requiring
            indices to these names. Defaults to all indices.

    Raises:
        Disconnected: A connectivity-requiring index was explicitly requested
            for a disconnected graph.

    Returns:
        Index report
    """

    spec = spectrum(g, settings=settings)
    zagreb = zagreb_forgotten(g)
    values = {
        "n": g.n,
        "m": g.m,
        "connected": spec.connected,
        "zagreb_m1": zagreb.m1,
        "forgotten_f": zagreb.f,
        "triangles": triangle_count(g),
        "tau": spanning_tree_count(g),
        "algebraic_connectivity": spec.algebraic_connectivity,
        "spectral_radius": spec.spectral_radius,
    }
    requested = set(include) if include else set(IndexName)
    if not spec.connected:
        needed = sorted(name.value for name in requested if name.requires_connected)
        if include and needed:
            raise Disconnected(
                f"{g!r} has {connected_components(g)} connected components; "
                f"cannot compute {', '.join(needed)}",
            )
        logger.warning(
            "%r is disconnected: only degree-based indices and the spanning tree count "
            "are reported",
            g,
        )
        return IndexReport(**values)
    distances = biharmonic_matrix(g, settings=settings)
    generalized = _generalized(g, distances)
    values.update(
        bh_spectral=bh_from_spectrum(spec),
        bh_distance=distances.pair_sum(),
        kirchhoff=kirchhoff_from_spectrum(spec),
        wiener=wiener_index(g),
        spectral_ratio=spec.spectral_ratio if g.n > 1 else None,
        sbi=generalized.sbi,
        gbi=generalized.gbi,
        xi_b=generalized.xi_b,
        xi_b_star=generalized.xi_b_star,
    )
    return IndexReport(**values)
