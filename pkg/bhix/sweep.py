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
Exhaustive sweeps over labelled graphs, and the worker pool shared by every scan.

A labelled graph on `n` vertices is an integer mask over the `n (n-1) / 2` vertex pairs,
in the column order of the graph6 upper triangle. Sweeps process contiguous ranges of
masks as batches of adjacency matrices.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from logging import getLogger
from typing import Callable, Iterator, List, NamedTuple, Sequence, Tuple, TypeVar

import numpy as np

from .formats import upper_triangle_indices
from .graph import Graph
from .indices import bareiss_determinant

logger = getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

CHUNK_SIZE = 1 << 16
"""
Number of masks processed per batch.
"""

FLOAT_DETERMINANT_MAX_N = 11
"""
Largest order whose spanning tree counts are taken from a rounded floating point
determinant. Counts are at most `n^(n-2) < 2^32` there, far inside double precision.
"""


@lru_cache(maxsize=None)
def pair_indices(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Row and column of the vertex pair addressed by each bit of a mask.
    """

    return upper_triangle_indices(n)


def mask_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def mask_ranges(n: int, chunk_size: int = CHUNK_SIZE) -> List[Tuple[int, int]]:
    """
    Split the masks of order `n` into `[start, stop)` ranges of at most `chunk_size` masks.
    """

    total = mask_count(n)
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def adjacency_batch(n: int, masks: np.ndarray) -> np.ndarray:
    """
    Adjacency matrices of a batch of masks.

    Args:
        n (int): Vertex count.
        masks (np.ndarray): Integer masks of shape `(k,)`.

    Returns:
        Boolean array of shape `(k, n, n)`
    """

    rows, cols = pair_indices(n)
    bits = ((masks[:, None] >> np.arange(rows.size, dtype=np.int64)) & 1).astype(bool)
    adjacency = np.zeros((masks.size, n, n), dtype=bool)
    adjacency[:, rows, cols] = bits
    adjacency[:, cols, rows] = bits
    return adjacency


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(adjacency_batch(n, np.array([mask], dtype=np.int64))[0])


def reachability(adjacency: np.ndarray, steps: int) -> np.ndarray:
    """
    Boolean matrices of vertex pairs joined by a walk of length at most `steps`.
    """

    n = adjacency.shape[-1]
    step = (adjacency | np.identity(n, dtype=bool)).astype(np.float64)
    reach = step.copy()
    covered = 1
    # Repeated squaring while the covered walk length is below `steps`.
    while covered * 2 <= steps:
        reach = np.minimum(reach @ reach, 1.0)
        covered *= 2
    while covered < steps:
        reach = np.minimum(reach @ step, 1.0)
        covered += 1
    return reach > 0


def connected_mask(adjacency: np.ndarray) -> np.ndarray:
    """
    Which adjacency matrices of a batch describe connected graphs.
    """

    n = adjacency.shape[-1]
    return reachability(adjacency, max(n - 1, 1)).all(axis=(1, 2))


def spanning_tree_counts(laplacians: np.ndarray) -> np.ndarray:
    """
    Spanning tree counts of a batch of graphs of the same order.

    Up to `FLOAT_DETERMINANT_MAX_N` vertices the floating point determinant of the reduced
    Laplacian is rounded, which is exact there. Larger graphs use exact integer
    elimination, one graph at a time.
    """

    n = laplacians.shape[-1]
    if n == 1:
        return np.ones(laplacians.shape[0], dtype=np.float64)
    reduced = laplacians[:, 1:, 1:]
    if n <= FLOAT_DETERMINANT_MAX_N:
        return np.rint(np.linalg.det(reduced))
    return np.array(
        [float(bareiss_determinant(np.rint(matrix).astype(np.int64))) for matrix in reduced],
        dtype=np.float64,
    )


class Batch(NamedTuple):
    """
    Connected graphs of one mask range, with their batched invariants.
    """

    n: int
    masks: np.ndarray
    adjacency: np.ndarray
    degrees: np.ndarray
    laplacians: np.ndarray


def connected_batch(n: int, start: int, stop: int) -> Batch:
    """
    The connected graphs among masks `[start, stop)`.
    """

    masks = np.arange(start, stop, dtype=np.int64)
    adjacency = adjacency_batch(n, masks)
    keep = connected_mask(adjacency)
    adjacency = adjacency[keep]
    degrees = adjacency.sum(axis=2).astype(np.float64)
    laplacians = -adjacency.astype(np.float64)
    index = np.arange(n)
    laplacians[:, index, index] = degrees
    logger.debug("Masks [%i, %i) of order %i: %i connected", start, stop, n, int(keep.sum()))
    return Batch(
        n=n,
        masks=masks[keep],
        adjacency=adjacency,
        degrees=degrees,
        laplacians=laplacians,
    )


def run_sharded(function: Callable[[T], R], shards: Sequence[T], workers: int) -> Iterator[R]:
    """
    Apply a function to every shard, in a process pool when `workers > 1`.

    Results are yielded in shard order regardless of the number of workers,
    so merging them gives the same report as a sequential run.

    Args:
        function (Callable[[T], R]): Picklable module-level function.
        shards (Sequence[T]): Work items.
        workers (int): Number of worker processes.

    Returns:
        Iterator of per-shard results
    """

    if workers <= 1 or len(shards) <= 1:
        logger.debug("Running %i shards sequentially", len(shards))
        yield from map(function, shards)
        return
    logger.debug("Running %i shards on %i workers", len(shards), workers)
    with ProcessPoolExecutor(max_workers=min(workers, len(shards))) as executor:
        yield from executor.map(function, shards)
