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
Test the extremal scans over trees and diameter-2 graphs.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from bhix.exceptions import TooLarge, TooSmall
from bhix.extremal import conjecture_scan, diameter2_scan, scans, theorem_5_2_scan
from bhix.extremal.scans import path_sequence, star_bh, witness_values
from bhix.extremal.trees import level_sequence_to_graph
from bhix.formats import parse_graph6
from bhix.graph import structure_report
from bhix.settings import BhixSettings


def test_star_bh() -> None:
    """
    Check the biharmonic index of the star.
    """

    assert star_bh(4) == Fraction(33, 4)
    assert star_bh(5) == Fraction(76, 5)


def test_path_sequence() -> None:
    """
    Check that the path sequence describes a path.
    """

    for n in (5, 6):
        report = structure_report(level_sequence_to_graph(path_sequence(n)))
        assert report.diameter == n - 1
        assert report.max_degree == 2
    assert witness_values([path_sequence(5)])[0] == pytest.approx(38.0)


def test_witness_values_zero_tolerance(mocker) -> None:
    """
    Check that tree indices clamp eigenvalues with the configured zero tolerance.
    """

    spy = mocker.spy(scans, "spectra_batch")
    settings = BhixSettings(zero_tolerance=1e-6, workers=1)
    assert witness_values([path_sequence(5)], settings=settings)[0] == pytest.approx(38.0)
    assert spy.call_args.args[1] == 1e-6


def test_conjecture_scan_order_5(settings) -> None:
    """
    Check the tree scan on 5 vertices: the star is the minimum, the path the maximum.
    """

    report = conjecture_scan(5, settings=settings)
    assert report.trees == 3
    assert report.min_value == pytest.approx(15.2)
    assert report.max_value == pytest.approx(38.0)
    assert report.runner_up_min == pytest.approx(24.8)
    assert report.min_witness.is_star
    assert report.max_witness.is_path
    assert not report.ambiguous_witness
    assert not report.counterexamples
    assert report.fiedler_bound_violations == 0
    assert report.small_eigenvalue_violations == 0
    assert report.conjecture_verified


@pytest.mark.parametrize("n", [8, 11])
def test_conjecture_scan(settings, n) -> None:
    """
    Check the tree scan at larger orders.
    """

    report = conjecture_scan(n, settings=settings)
    assert report.min_value == pytest.approx(float(star_bh(n)))
    assert report.conjecture_verified
    assert report.fiedler_bound_violations == 0
    assert report.small_eigenvalue_violations == 0


@pytest.mark.slow
def test_conjecture_scan_slow(settings) -> None:
    """
    Check the tree scan on 16 vertices.
    """

    assert conjecture_scan(16, settings=settings).conjecture_verified


def test_conjecture_scan_too_small() -> None:
    """
    Check that the tree scan needs 5 vertices.
    """

    with pytest.raises(TooSmall):
        conjecture_scan(4, workers=1)
    with pytest.raises(TooLarge):
        conjecture_scan(19, workers=1)


@pytest.mark.parametrize("n", [8, 10])
def test_theorem_5_2_scan(settings, n) -> None:
    """
    Check that trees of large diameter have a larger index than the star.
    """

    report = theorem_5_2_scan(n, settings=settings)
    assert report.hypothesis_trees > 0
    assert report.hypothesis_trees < report.trees
    assert report.min_bh_meeting_hypothesis > float(report.star_bh)
    assert report.verified


def test_theorem_5_2_scan_too_small() -> None:
    """
    Check that the diameter bound is checked from 8 vertices.
    """

    with pytest.raises(TooSmall):
        theorem_5_2_scan(7)


@pytest.mark.parametrize("workers", [1, pytest.param(2, marks=pytest.mark.slow)])
def test_theorem_5_2_scan_sharded(monkeypatch, settings, workers) -> None:
    """
    Check that splitting the diameter bound scan into many shards gives the same report.
    """

    whole = theorem_5_2_scan(12, workers=1, settings=settings)
    monkeypatch.setattr(scans, "TREE_SHARD_SIZE", 16)
    sharded = theorem_5_2_scan(12, workers=workers, settings=settings)
    assert sharded.trees == whole.trees == 551
    assert sharded.hypothesis_trees == whole.hypothesis_trees
    assert sharded.min_bh_meeting_hypothesis == pytest.approx(whole.min_bh_meeting_hypothesis)
    assert sharded.verified and whole.verified


def test_diameter2_scan_order_4(settings) -> None:
    """
    Check the diameter-2 scan on 4 vertices: the largest non-star index is that of
    a triangle with a pendant edge.
    """

    report = diameter2_scan(4, settings=settings)
    assert report.masks == 64
    assert report.star_bh == Fraction(33, 4)
    assert report.max_non_star_bh == pytest.approx(169 / 36)
    assert structure_report(parse_graph6(report.max_non_star_witness)).triangles == 1
    assert report.gap == pytest.approx(33 / 4 - 169 / 36)
    assert report.min_lambda_2 == pytest.approx(1.0)
    assert report.verified


@pytest.mark.parametrize("n", [3, 5, 6])
def test_diameter2_scan(settings, n) -> None:
    """
    Check the diameter-2 scan at other orders.
    """

    report = diameter2_scan(n, settings=settings)
    assert report.diameter2_graphs > 0
    assert report.violation_count == 0
    assert report.lambda_2_violations == 0
    assert report.degree_bound_violations == 0
    assert report.verified


@pytest.mark.parametrize(("n", "error"), [(2, TooSmall), (8, TooLarge)])
def test_diameter2_scan_limits(n, error) -> None:
    """
    Check the order limits of the diameter-2 scan.
    """

    with pytest.raises(error):
        diameter2_scan(n, workers=1)
