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
Exhaustive scans behind the extremal results for trees and diameter-2 graphs.
"""

from __future__ import annotations

import math

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from logging import getLogger
from typing import TYPE_CHECKING, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict, computed_field

from ..exceptions import TooLarge, TooSmall
from ..formats import encode_graph6
from ..settings import settings as default_settings
from ..spectra import spectra_batch
from ..sweep import connected_batch, graph_from_mask, mask_ranges, run_sharded
from ..types import Rational
from .trees import (
    LevelSequence,
    TreeIterator,
    level_sequence_laplacians,
    level_sequence_parents,
    level_sequence_to_graph,
    tree_diameter,
)

if TYPE_CHECKING:
    from ..settings import BhixSettings

logger = getLogger(__name__)

TREE_SHARD_SIZE = 1024
UNIQUENESS_GAP = 1e-6
"""
Absolute gap below which two extreme values are considered tied.
"""

SANITY_TOLERANCE = 1e-9
DIAMETER2_MAX_N = 7
MAX_RECORDED = 100


def star_bh(n: int) -> Fraction:
    """
    `BH(K_{1,n-1}) = n^2 - 2n + 1/n`.
    """

    return n * n - 2 * n + Fraction(1, n)


def _bh_batch(eigenvalues: np.ndarray) -> np.ndarray:
    n = eigenvalues.shape[1]
    return n * np.sum(1.0 / eigenvalues[:, 1:] ** 2, axis=1)


def witness_values(
    sequences: Sequence[LevelSequence],
    settings: Optional[BhixSettings] = None,
) -> np.ndarray:
    """
    Biharmonic indices of a batch of trees of the same order.
    """

    settings = settings or default_settings
    eigenvalues = spectra_batch(level_sequence_laplacians(sequences), settings.zero_tolerance)
    return _bh_batch(eigenvalues)


class TreeWitness(BaseModel):
    """
    A tree attaining a recorded value.
    """

    model_config = ConfigDict(frozen=True)

    level_sequence: List[int]
    graph6: str
    value: float
    is_star: bool
    is_path: bool

    @classmethod
    def of(cls, levels: LevelSequence, value: float) -> TreeWitness:
        g = level_sequence_to_graph(levels)
        return cls(
            level_sequence=list(levels),
            graph6=encode_graph6(g),
            value=value,
            is_star=g.max_degree == g.n - 1,
            is_path=g.max_degree <= 2,
        )


@dataclass
class _TreeExtremes:
    """
    Mergeable partial result of a tree scan shard: the two smallest and two largest
    values with their trees, counters and recorded counterexamples.
    """

    trees: int = 0
    lowest: List[Tuple[float, LevelSequence]] = field(default_factory=list)
    highest: List[Tuple[float, LevelSequence]] = field(default_factory=list)
    counterexamples: List[Tuple[float, LevelSequence]] = field(default_factory=list)
    fiedler_bound_violations: int = 0
    small_eigenvalue_violations: int = 0

    def merge(self, other: _TreeExtremes) -> _TreeExtremes:
        return _TreeExtremes(
            trees=self.trees + other.trees,
            lowest=sorted(self.lowest + other.lowest, key=lambda item: item[0])[:2],
            highest=sorted(self.highest + other.highest, key=lambda item: -item[0])[:2],
            counterexamples=(self.counterexamples + other.counterexamples)[:MAX_RECORDED],
            fiedler_bound_violations=self.fiedler_bound_violations
            + other.fiedler_bound_violations,
            small_eigenvalue_violations=self.small_eigenvalue_violations
            + other.small_eigenvalue_violations,
        )


class ScanReport(BaseModel):
    """
    Smallest and largest biharmonic index over every free tree of one order.
    """

    model_config = ConfigDict(use_attribute_docstrings=True)

    n: int
    trees: int
    min_value: float
    min_witness: TreeWitness
    max_value: float
    max_witness: TreeWitness
    runner_up_min: Optional[float] = None
    runner_up_max: Optional[float] = None
    ambiguous_witness: bool = False
    """
    Set when the runner-up of either extreme is within `1e-6` of it, so uniqueness
    cannot be certified from floating point spectra.
    """

    counterexamples: List[TreeWitness] = []
    """
    Trees other than the star reaching the star's value, or other than the path
    reaching the path's value.
    """

    fiedler_bound_violations: int = 0
    """
    Trees with `lambda_2 > 2 (1 - cos(pi / (d + 1)))`, `d` the diameter.
    """

    small_eigenvalue_violations: int = 0
    """
    Trees with fewer than `ceil(n / 2)` Laplacian eigenvalues below `2 - 2/n`.
    """

    @computed_field  # type: ignore[prop-decorator]
    @property
    def conjecture_verified(self) -> bool:
        return (
            self.min_witness.is_star
            and self.max_witness.is_path
            and not self.ambiguous_witness
            and not self.counterexamples
        )


def _scan_tree_shard(
    shard: Tuple[List[LevelSequence], float, float, BhixSettings],
) -> _TreeExtremes:
    sequences, low_reference, high_reference, settings = shard
    n = len(sequences[0])
    eigenvalues = spectra_batch(level_sequence_laplacians(sequences), settings.zero_tolerance)
    values = _bh_batch(eigenvalues)
    order = np.argsort(values, kind="stable")
    max_degrees = np.array([max(_degrees(levels)) for levels in sequences])
    is_star = max_degrees == n - 1
    is_path = max_degrees <= 2
    counterexamples = [
        (float(values[i]), sequences[i])
        for i in range(len(sequences))
        if (not is_star[i] and values[i] <= low_reference + UNIQUENESS_GAP)
        or (not is_path[i] and values[i] >= high_reference - UNIQUENESS_GAP)
    ]
    diameters = np.array([tree_diameter(levels) for levels in sequences], dtype=np.float64)
    fiedler_limit = 2 * (1 - np.cos(np.pi / (diameters + 1))) + SANITY_TOLERANCE
    small = np.count_nonzero(eigenvalues < 2 - 2 / n + SANITY_TOLERANCE, axis=1)
    return _TreeExtremes(
        trees=len(sequences),
        lowest=[(float(values[i]), sequences[i]) for i in order[:2]],
        highest=[(float(values[i]), sequences[i]) for i in order[::-1][:2]],
        counterexamples=counterexamples[:MAX_RECORDED],
        fiedler_bound_violations=int(np.count_nonzero(eigenvalues[:, 1] > fiedler_limit)),
        small_eigenvalue_violations=int(np.count_nonzero(small < math.ceil(n / 2))),
    )


def _degrees(levels: LevelSequence) -> List[int]:
    degrees = [0] * len(levels)
    for child, parent in enumerate(level_sequence_parents(levels)):
        if parent >= 0:
            degrees[child] += 1
            degrees[parent] += 1
    return degrees


def _chunks(sequences: Iterator[LevelSequence], size: int) -> Iterator[List[LevelSequence]]:
    while True:
        chunk = list(islice(sequences, size))
        if not chunk:
            return
        yield chunk


def path_sequence(n: int) -> LevelSequence:
    """
    Canonical level sequence of the path on `n` vertices, rooted at its centre.
    """

    return tuple(range(n // 2 + 1)) + tuple(range(1, (n + 1) // 2))


def conjecture_scan(
    n: int,
    workers: Optional[int] = None,
    settings: Optional[BhixSettings] = None,
) -> ScanReport:
    """
    Compute the biharmonic index of every free tree on `n` vertices, and check that
    the star is the unique minimum and the path the unique maximum.

    Args:
        n (int): Vertex count (`5 <= n <= 18`).
        workers (Optional[int], optional): Worker processes. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        TooSmall: `n < 5`.
        TooLarge: `n > 18`.

    Returns:
        Scan report
    """

    settings = settings or default_settings
    if n < 5:
        raise TooSmall(f"The tree scan needs n >= 5, got n={n}")
    iterator = TreeIterator(n)
    low_reference = float(star_bh(n))
    high_reference = float(witness_values([path_sequence(n)], settings=settings)[0])
    shards = [
        (chunk, low_reference, high_reference, settings)
        for chunk in _chunks(iterator.sequences(), TREE_SHARD_SIZE)
    ]
    logger.info("Scanning free trees on %i vertices (%i shards)", n, len(shards))
    result = _TreeExtremes()
    for partial in run_sharded(_scan_tree_shard, shards, workers or settings.workers):
        result = result.merge(partial)
    lowest, highest = result.lowest, result.highest
    runner_up_min = lowest[1][0] if len(lowest) > 1 else None
    runner_up_max = highest[1][0] if len(highest) > 1 else None
    ambiguous = (runner_up_min is not None and runner_up_min - lowest[0][0] <= UNIQUENESS_GAP) or (
        runner_up_max is not None and highest[0][0] - runner_up_max <= UNIQUENESS_GAP
    )
    report = ScanReport(
        n=n,
        trees=result.trees,
        min_value=lowest[0][0],
        min_witness=TreeWitness.of(lowest[0][1], lowest[0][0]),
        max_value=highest[0][0],
        max_witness=TreeWitness.of(highest[0][1], highest[0][0]),
        runner_up_min=runner_up_min,
        runner_up_max=runner_up_max,
        ambiguous_witness=ambiguous,
        counterexamples=[TreeWitness.of(levels, value) for value, levels in result.counterexamples],
        fiedler_bound_violations=result.fiedler_bound_violations,
        small_eigenvalue_violations=result.small_eigenvalue_violations,
    )
    if ambiguous:
        logger.warning("Tree scan at n=%i: extreme values tie within %g", n, UNIQUENESS_GAP)
    logger.info(
        "Tree scan at n=%i: %i trees, min %.12g, max %.12g, verified=%s",
        n,
        report.trees,
        report.min_value,
        report.max_value,
        report.conjecture_verified,
    )
    return report


class DiameterBoundReport(BaseModel):
    """
    Trees of large diameter compared with the star.
    """

    model_config = ConfigDict(use_attribute_docstrings=True)

    n: int
    threshold: float
    """
    Trees with diameter at least `pi (7n/8)^(1/4) - 1` meet the hypothesis.
    """

    trees: int
    hypothesis_trees: int
    star_bh: Rational
    min_bh_meeting_hypothesis: Optional[float] = None
    violations: List[TreeWitness] = []

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verified(self) -> bool:
        return not self.violations


@dataclass
class _DiameterBoundPartial:
    """
    Mergeable partial result of a diameter bound shard.
    """

    trees: int = 0
    hypothesis_trees: int = 0
    min_value: Optional[float] = None
    violations: List[Tuple[float, LevelSequence]] = field(default_factory=list)

    def merge(self, other: _DiameterBoundPartial) -> _DiameterBoundPartial:
        minima = [value for value in (self.min_value, other.min_value) if value is not None]
        return _DiameterBoundPartial(
            trees=self.trees + other.trees,
            hypothesis_trees=self.hypothesis_trees + other.hypothesis_trees,
            min_value=min(minima) if minima else None,
            violations=(self.violations + other.violations)[:MAX_RECORDED],
        )


def _diameter_bound_shard(
    shard: Tuple[List[LevelSequence], float, float, BhixSettings],
) -> _DiameterBoundPartial:
    sequences, threshold, limit, settings = shard
    meeting = [levels for levels in sequences if tree_diameter(levels) >= threshold]
    if not meeting:
        return _DiameterBoundPartial(trees=len(sequences))
    values = witness_values(meeting, settings=settings)
    return _DiameterBoundPartial(
        trees=len(sequences),
        hypothesis_trees=len(meeting),
        min_value=float(values.min()),
        violations=[
            (float(value), levels) for levels, value in zip(meeting, values) if value <= limit
        ][:MAX_RECORDED],
    )


def theorem_5_2_scan(
    n: int,
    workers: Optional[int] = None,
    settings: Optional[BhixSettings] = None,
) -> DiameterBoundReport:
    """
    Check that every tree on `n` vertices whose diameter is at least
    `pi (7n/8)^(1/4) - 1` has a larger biharmonic index than the star.

    Args:
        n (int): Vertex count (`8 <= n <= 18`).
        workers (Optional[int], optional): Worker processes. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        TooSmall: `n < 8`.
        TooLarge: `n > 18`.

    Returns:
        Scan report
    """

    settings = settings or default_settings
    if n < 8:
        raise TooSmall(f"The diameter bound is checked for n >= 8, got n={n}")
    iterator = TreeIterator(n)
    threshold = math.pi * (7 * n / 8) ** 0.25 - 1
    star = star_bh(n)
    limit = float(star) * (1 + settings.holds_tolerance)
    shards = [
        (chunk, threshold, limit, settings)
        for chunk in _chunks(iterator.sequences(), TREE_SHARD_SIZE)
    ]
    result = _DiameterBoundPartial()
    for partial in run_sharded(_diameter_bound_shard, shards, workers or settings.workers):
        result = result.merge(partial)
    report = DiameterBoundReport(
        n=n,
        threshold=threshold,
        trees=result.trees,
        hypothesis_trees=result.hypothesis_trees,
        star_bh=Rational(star),
        min_bh_meeting_hypothesis=result.min_value,
        violations=[TreeWitness.of(levels, value) for value, levels in result.violations],
    )
    logger.info(
        "Diameter bound at n=%i: %i of %i trees meet the hypothesis, %i violations",
        n,
        report.hypothesis_trees,
        report.trees,
        len(report.violations),
    )
    return report


class Diameter2Report(BaseModel):
    """
    Biharmonic index of every labelled graph of diameter 2 on `n` vertices,
    compared with the star.
    """

    model_config = ConfigDict(use_attribute_docstrings=True)

    n: int
    masks: int
    diameter2_graphs: int
    star_bh: Rational
    max_non_star_bh: Optional[float] = None
    max_non_star_witness: Optional[str] = None
    """
    graph6 string of a non-star graph attaining `max_non_star_bh`.
    """

    gap: Optional[float] = None
    """
    `star_bh - max_non_star_bh`.
    """

    violations: List[str] = []
    """
    graph6 strings of graphs exceeding the star, or non-stars equalling it.
    """

    violation_count: int = 0
    min_lambda_2: Optional[float] = None
    lambda_2_violations: int = 0
    """
    Graphs with `lambda_2 < 1`.
    """

    degree_bound_violations: int = 0
    """
    Graphs with `lambda_n < Delta + 1` or `lambda_(n-1) < Delta_2`,
    the two largest degrees being `Delta >= Delta_2`.
    """

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verified(self) -> bool:
        return (
            self.violation_count == 0
            and self.lambda_2_violations == 0
            and self.degree_bound_violations == 0
        )

    def merge(self, other: Diameter2Report) -> Diameter2Report:
        best = self
        if other.max_non_star_bh is not None and (
            self.max_non_star_bh is None or other.max_non_star_bh > self.max_non_star_bh
        ):
            best = other
        lambda_2 = [v for v in (self.min_lambda_2, other.min_lambda_2) if v is not None]
        return Diameter2Report(
            n=self.n,
            masks=self.masks + other.masks,
            diameter2_graphs=self.diameter2_graphs + other.diameter2_graphs,
            star_bh=self.star_bh,
            max_non_star_bh=best.max_non_star_bh,
            max_non_star_witness=best.max_non_star_witness,
            gap=best.gap,
            violations=(self.violations + other.violations)[:MAX_RECORDED],
            violation_count=self.violation_count + other.violation_count,
            min_lambda_2=min(lambda_2) if lambda_2 else None,
            lambda_2_violations=self.lambda_2_violations + other.lambda_2_violations,
            degree_bound_violations=self.degree_bound_violations + other.degree_bound_violations,
        )


def _diameter2_shard(shard: Tuple[int, int, int, BhixSettings]) -> Diameter2Report:
    n, start, stop, settings = shard
    star = star_bh(n)
    batch = connected_batch(n, start, stop)
    a = batch.adjacency.astype(np.float64)
    within_two = (np.identity(n) + a + a @ a) > 0
    complete = batch.degrees.sum(axis=1) == n * (n - 1)
    keep = np.all(within_two, axis=(1, 2)) & ~complete
    report = Diameter2Report(
        n=n,
        masks=stop - start,
        diameter2_graphs=int(np.count_nonzero(keep)),
        star_bh=Rational(star),
    )
    if not keep.any():
        return report
    masks = batch.masks[keep]
    degrees = np.sort(batch.degrees[keep], axis=1)
    eigenvalues = spectra_batch(batch.laplacians[keep], settings.zero_tolerance)
    values = _bh_batch(eigenvalues)
    is_star = (degrees.sum(axis=1) == 2 * (n - 1)) & (degrees[:, -1] == n - 1)
    star_value = float(star)
    margin = settings.holds_tolerance * star_value
    bad = (values > star_value + margin) | (~is_star & (values >= star_value - margin))
    updates = {
        "violations": [
            encode_graph6(graph_from_mask(n, int(mask))) for mask in masks[bad][:MAX_RECORDED]
        ],
        "violation_count": int(np.count_nonzero(bad)),
        "min_lambda_2": float(eigenvalues[:, 1].min()),
        "lambda_2_violations": int(np.count_nonzero(eigenvalues[:, 1] < 1 - SANITY_TOLERANCE)),
        "degree_bound_violations": int(
            np.count_nonzero(
                (eigenvalues[:, -1] < degrees[:, -1] + 1 - SANITY_TOLERANCE)
                | (eigenvalues[:, -2] < degrees[:, -2] - SANITY_TOLERANCE),
            ),
        ),
    }
    if (~is_star).any():
        candidates = np.flatnonzero(~is_star)
        best = candidates[np.argmax(values[candidates])]
        updates.update(
            max_non_star_bh=float(values[best]),
            max_non_star_witness=encode_graph6(graph_from_mask(n, int(masks[best]))),
            gap=star_value - float(values[best]),
        )
    return report.model_copy(update=updates)


def diameter2_scan(
    n: int,
    workers: Optional[int] = None,
    settings: Optional[BhixSettings] = None,
) -> Diameter2Report:
    """
    Check every labelled graph of diameter 2 on `n` vertices against the star:
    `BH(G) <= n^2 - 2n + 1/n`, with equality only for the star.

    Also checks `lambda_2 >= 1` and the two degree bounds `lambda_n >= Delta + 1`
    and `lambda_(n-1) >= Delta_2` on every graph scanned.

    Args:
        n (int): Vertex count (`3 <= n <= 7`).
        workers (Optional[int], optional): Worker processes. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        TooSmall: `n < 3`.
        TooLarge: `n > 7`.

    Returns:
        Scan report
    """

    settings = settings or default_settings
    if n < 3:
        raise TooSmall(f"Diameter-2 graphs need n >= 3, got n={n}")
    if n > DIAMETER2_MAX_N:
        raise TooLarge(f"The diameter-2 scan is capped at n={DIAMETER2_MAX_N}, got n={n}")
    shards = [(n, start, stop, settings) for start, stop in mask_ranges(n)]
    logger.info("Scanning diameter-2 graphs on %i vertices (%i shards)", n, len(shards))
    report: Optional[Diameter2Report] = None
    for partial in run_sharded(_diameter2_shard, shards, workers or settings.workers):
        report = partial if report is None else report.merge(partial)
    assert report is not None
    logger.info(
        "Diameter-2 scan at n=%i: %i graphs, max non-star %s, verified=%s",
        n,
        report.diameter2_graphs,
        report.max_non_star_bh,
        report.verified,
    )
    return report
