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
Test the exhaustive adjacency mask sweeps.
"""

from __future__ import annotations

import numpy as np
import pytest

from bhix.bounds import BoundTally, sweep_bounds
from bhix.exceptions import NonPositiveP, TooLarge, TooSmall
from bhix.families import family
from bhix.formats import encode_graph6
from bhix.indices import spanning_tree_count
from bhix.spectra import laplacian
from bhix.sweep import (
    adjacency_batch,
    connected_batch,
    connected_mask,
    graph_from_mask,
    mask_count,
    mask_ranges,
    run_sharded,
    spanning_tree_counts,
)

CONNECTED_LABELLED_GRAPHS = {2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


def test_mask_ranges() -> None:
    """
    Check that the mask ranges cover every mask exactly once.
    """

    assert mask_count(5) == 1024
    assert mask_ranges(5, chunk_size=300) == [(0, 300), (300, 600), (600, 900), (900, 1024)]
    assert mask_ranges(2) == [(0, 2)]


def test_graph_from_mask() -> None:
    """
    Check that mask bits follow the graph6 pair order.
    """

    assert encode_graph6(graph_from_mask(3, 0b101)) == "Bg"
    assert encode_graph6(graph_from_mask(4, 0b111111)) == "C~"


def test_adjacency_batch() -> None:
    """
    Check that batched adjacency matrices match the single-mask graphs.
    """

    masks = np.arange(mask_count(4), dtype=np.int64)
    batch = adjacency_batch(4, masks)
    assert batch.shape == (64, 4, 4)
    for mask in (0, 7, 38, 63):
        assert np.array_equal(batch[mask], graph_from_mask(4, mask).adjacency)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_connected_mask(n) -> None:
    """
    Check the number of connected labelled graphs.
    """

    masks = np.arange(mask_count(n), dtype=np.int64)
    assert int(connected_mask(adjacency_batch(n, masks)).sum()) == CONNECTED_LABELLED_GRAPHS[n]


def test_connected_batch() -> None:
    """
    Check that a connected batch carries consistent Laplacians and spanning tree counts.
    """

    batch = connected_batch(4, 0, mask_count(4))
    assert batch.masks.size == 38
    for i in (0, 17, 37):
        g = graph_from_mask(4, int(batch.masks[i]))
        assert np.array_equal(batch.laplacians[i], laplacian(g))
        assert spanning_tree_counts(batch.laplacians[i : i + 1])[0] == spanning_tree_count(g)


@pytest.mark.parametrize("n", [9, 11, 12, 16, 20])
def test_spanning_tree_counts_complete(n) -> None:
    """
    Check Cayley's formula on both sides of the floating point determinant cutoff.
    """

    laplacians = laplacian(family("complete", n=n))[np.newaxis]
    assert spanning_tree_counts(laplacians)[0] == float(n ** (n - 2))


@pytest.mark.parametrize("n", [6, 11, 12, 14, 18])
def test_spanning_tree_counts_random(random_connected_graph, n) -> None:
    """
    Check batched spanning tree counts against exact elimination on random graphs.
    """

    graphs = [random_connected_graph(n, p) for p in (0.1, 0.4, 0.8)]
    counts = spanning_tree_counts(np.stack([laplacian(g) for g in graphs]))
    assert list(counts) == [float(spanning_tree_count(g)) for g in graphs]


def test_run_sharded_sequential() -> None:
    """
    Check that a single worker applies the function in shard order.
    """

    assert list(run_sharded(abs, [-3, 1, -2], 1)) == [3, 1, 2]


@pytest.mark.slow
def test_run_sharded_parallel() -> None:
    """
    Check that a process pool yields results in shard order.
    """

    shards = list(range(-20, 20))
    assert list(run_sharded(abs, shards, 4)) == [abs(s) for s in shards]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sweep_bounds(settings, n) -> None:
    """
    Check that every bound holds on every connected graph, with the expected
    equality cases.
    """

    report = sweep_bounds(n, settings=settings)
    assert report.masks == mask_count(n)
    assert report.connected_graphs == CONNECTED_LABELLED_GRAPHS[n]
    assert report.all_hold
    assert report.equality_certified
    assert all(tally.checked == report.connected_graphs for tally in report.tallies.values())


def test_sweep_bounds_order_4(settings) -> None:
    """
    Check the equality counts on the 4-vertex graphs: the complete graph attains the
    power-sum bound, and the complete graph, stars, 4-cycles and the complete graph
    minus an edge (14 labelled graphs) attain the eigenvalue-spread bound.
    """

    report = sweep_bounds(4, p_grid=[1.0], settings=settings)
    assert report.tallies["T3_3[p=1]"].equality == 1
    assert report.tallies["T4_1"].equality == 14


def test_sweep_bounds_printed_constant(settings) -> None:
    """
    Check that the printed eigenvalue-spread constant fails on the three labelled
    3-vertex paths.
    """

    report = sweep_bounds(3, settings=settings)
    assert report.tallies["T4_3"] == BoundTally(checked=4, holds=4, equality=4, paper_violations=3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_sweep_bounds_slow(settings, n) -> None:
    """
    Check every bound on the 6- and 7-vertex graphs.
    """

    report = sweep_bounds(n, settings=settings)
    assert report.connected_graphs == CONNECTED_LABELLED_GRAPHS[n]
    assert report.all_hold
    assert report.equality_certified


@pytest.mark.parametrize(
    ("n", "p_grid", "error"),
    [
        (1, [1.0], TooSmall),
        (9, [1.0], TooLarge),
        (4, [1.0, 0.0], NonPositiveP),
    ],
)
def test_sweep_bounds_errors(n, p_grid, error) -> None:
    """
    Check the sweep order limits and the exponent check.
    """

    with pytest.raises(error):
        sweep_bounds(n, p_grid=p_grid, workers=1)
