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
Inequalities between the biharmonic index and the Zagreb, forgotten and Kirchhoff indices.

Every bound is written once over array inputs (`BoundInputs`), so the same formula
evaluates a single graph or a whole batch of graphs from an exhaustive sweep.
"""

from __future__ import annotations

import math

from dataclasses import dataclass
from functools import cached_property
from logging import getLogger
from typing import TYPE_CHECKING, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict, computed_field

from .exceptions import Disconnected, NonPositiveP, TooLarge, TooSmall
from .formats import encode_graph6
from .graph import triangle_count
from .indices import spanning_tree_count, zagreb_forgotten
from .settings import DEFAULT_P_GRID, BhixSettings, settings as default_settings
from .spectra import spectra_batch, spectrum
from .sweep import (
    Batch,
    connected_batch,
    graph_from_mask,
    mask_count,
    mask_ranges,
    run_sharded,
    spanning_tree_counts,
)
from .types import BaseEnum

if TYPE_CHECKING:
    from .graph import Graph
    from .spectra import Spectrum

logger = getLogger(__name__)


class BoundId(BaseEnum):
    """
    Identifiers of the verified inequalities.
    """

    T3_1 = "T3_1"
    T3_2 = "T3_2"
    T3_3 = "T3_3"
    C3_1 = "C3_1"
    C3_2 = "C3_2"
    T4_1 = "T4_1"
    T4_2_lower = "T4_2_lower"
    T4_2_upper = "T4_2_upper"
    T4_3 = "T4_3"


UPPER_BOUNDS = frozenset(
    [BoundId.T3_1, BoundId.T3_2, BoundId.T4_1, BoundId.T4_2_upper, BoundId.T4_3],
)
"""
Bounds of the form `lhs <= rhs`; every other bound is of the form `lhs >= rhs`.
"""

MIN_ORDER = {BoundId.T4_2_lower: 3, BoundId.T4_2_upper: 3}


@dataclass(frozen=True, eq=False)
class BoundInputs:
    """
    Graph invariants consumed by the bounds, for a batch of `k` connected graphs
    sharing the vertex count `n`.
    """

    n: int
    m: np.ndarray
    m1: np.ndarray
    f: np.ndarray
    triangles: np.ndarray
    log_n_tau: np.ndarray
    """
    Natural logarithm of `n * tau(G)`, taken from the exact spanning tree count.
    """

    eigenvalues: np.ndarray
    """
    Array of shape `(k, n - 1)`: `lambda_2..lambda_n` in ascending order.
    """

    @classmethod
    def of_graph(cls, g: Graph, spec: Optional[Spectrum] = None) -> BoundInputs:
        spec = spec or spectrum(g)
        if not spec.connected:
            raise Disconnected(
                f"Bounds are only defined for connected graphs; {g!r} has "
                f"{spec.zero_count} connected components",
            )
        if g.n < 2:
            raise TooSmall(f"Bounds need at least 2 vertices, got {g!r}")
        zagreb = zagreb_forgotten(g)
        return cls(
            n=g.n,
            m=np.array([g.m], dtype=np.float64),
            m1=np.array([zagreb.m1], dtype=np.float64),
            f=np.array([zagreb.f], dtype=np.float64),
            triangles=np.array([triangle_count(g)], dtype=np.float64),
            log_n_tau=np.array([math.log(g.n * spanning_tree_count(g))]),
            eigenvalues=spec.nonzero[None, :].astype(np.float64),
        )

    @cached_property
    def bh(self) -> np.ndarray:
        return self.n * np.sum(1.0 / self.eigenvalues**2, axis=1)

    @cached_property
    def kf(self) -> np.ndarray:
        return self.n * np.sum(1.0 / self.eigenvalues, axis=1)

    @property
    def lambda_2(self) -> np.ndarray:
        return self.eigenvalues[:, 0]

    @property
    def lambda_n(self) -> np.ndarray:
        return self.eigenvalues[:, -1]

    @cached_property
    def spectral_ratio(self) -> np.ndarray:
        return self.lambda_n / self.lambda_2

    def power_sum(self, exponent: float) -> np.ndarray:
        return np.sum(self.eigenvalues**exponent, axis=1)

    def cube_sum_corrected(self) -> np.ndarray:
        """
        `trace(L^3) = 3 M1 + F - 6 t`.
        """

        return 3 * self.m1 + self.f - 6 * self.triangles

    def cube_sum_paper(self) -> np.ndarray:
        """
        The sum of cubes in its printed form, `3 M1 + F + 6 t`.
        """

        return 3 * self.m1 + self.f + 6 * self.triangles


class BoundValues(NamedTuple):
    lhs: np.ndarray
    rhs: np.ndarray
    rhs_paper: Optional[np.ndarray] = None
    """
    The right-hand side exactly as printed, when it differs from the sound one.
    """


def _zagreb_prefactor(x: BoundInputs) -> np.ndarray:
    return x.n * (x.n - 1) ** 2 / (4 * (2 * x.m + x.m1))


def _t4_2_geometric_term(x: BoundInputs) -> np.ndarray:
    # (1 / (n tau))^(2 / (n - 1))
    return np.exp(-2.0 * x.log_n_tau / (x.n - 1))


def _t4_3_parity_factor(n: int) -> float:
    return 1.0 - (1 + (-1) ** (n + 1)) / (2.0 * n * n)


def evaluate(bound_id: BoundId, x: BoundInputs, p: Optional[float] = None) -> BoundValues:
    """
    Evaluate both sides of a bound on a batch of graphs.

    Args:
        bound_id (BoundId): Bound to evaluate.
        x (BoundInputs): Graph invariants.
        p (Optional[float], optional): Exponent of `T3_3`.

    Returns:
        Left-hand and right-hand sides
    """

    n = x.n
    r = x.spectral_ratio
    if bound_id == BoundId.T3_1:
        return BoundValues(x.bh, _zagreb_prefactor(x) * (r + 1 / r) ** 2)
    if bound_id == BoundId.T3_2:
        return BoundValues(x.bh, _zagreb_prefactor(x) * (4 + (r - 1 / r) ** 2))
    if bound_id == BoundId.T3_3:
        if p is None or p <= 0:
            raise NonPositiveP(f"The power-sum bound needs p > 0, got p={p}")
        ratio = (2 * x.m) ** (p + 1) / x.power_sum(3 * p + 1)
        return BoundValues(x.bh, n * ratio ** (1 / p))
    if bound_id == BoundId.C3_1:
        return BoundValues(x.bh, 16 * n * x.m**4 / (2 * x.m + x.m1) ** 3)
    if bound_id == BoundId.C3_2:
        numerator = 32.0 * n * n * x.m**5
        return BoundValues(
            x.bh,
            np.sqrt(numerator / x.cube_sum_corrected() ** 3),
            np.sqrt(numerator / x.cube_sum_paper() ** 3),
        )
    if bound_id == BoundId.T4_1:
        inverse_2 = 1 / x.lambda_2
        inverse_n = 1 / x.lambda_n
        return BoundValues(
            x.bh,
            (inverse_2 + inverse_n) * x.kf - n * (n - 1) * inverse_2 * inverse_n,
        )
    if bound_id == BoundId.T4_2_lower:
        return BoundValues(
            x.bh,
            x.kf**2 / (n * (n - 2)) - n * (n - 1) / (n - 2) * _t4_2_geometric_term(x),
        )
    if bound_id == BoundId.T4_2_upper:
        return BoundValues(
            x.bh,
            x.kf**2 / n - n * (n - 1) * (n - 2) * _t4_2_geometric_term(x),
        )
    if bound_id == BoundId.T4_3:
        spread = (1 / x.lambda_2 - 1 / x.lambda_n) ** 2
        # The averaging inequality runs over the n - 1 values 1/lambda_i, whose
        # sharp constant is floor((n-1)^2 / 4); the printed constant uses n instead.
        sharp = n * n * ((n - 1) ** 2 // 4) * spread
        printed = n * n * (n - 1) ** 2 / 4 * _t4_3_parity_factor(n) * spread
        return BoundValues(np.abs(n * (n - 1) * x.bh - x.kf**2), sharp, printed)
    raise ValueError(f"Unknown bound: {bound_id}")


class Judgement(NamedTuple):
    slack: np.ndarray
    holds: np.ndarray
    equality: np.ndarray


def judge(
    bound_id: BoundId,
    lhs: np.ndarray,
    rhs: np.ndarray,
    settings: Optional[BhixSettings] = None,
) -> Judgement:
    """
    Signed slack, validity and equality flags of a bound.

    The slack is `rhs - lhs` for upper bounds and `lhs - rhs` for lower bounds,
    so a bound holds when its slack is (up to tolerance) non-negative.
    """

    settings = settings or default_settings
    slack = rhs - lhs if bound_id in UPPER_BOUNDS else lhs - rhs
    scale = np.maximum(1.0, np.abs(rhs))
    holds = slack >= -settings.holds_tolerance * scale
    equality = np.abs(slack) < settings.equality_tolerance * scale
    return Judgement(slack=slack, holds=holds, equality=equality & holds)


class BoundReport(BaseModel):
    """
    One bound evaluated on one graph.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    bound_id: BoundId
    p: Optional[float] = None
    """
    Exponent of the power-sum bound (`T3_3` only).
    """

    lhs: float
    rhs: float
    rhs_paper: Optional[float] = None
    """
    Right-hand side as printed, where it differs from the sound right-hand side `rhs`.
    """

    holds: bool
    slack: float
    equality: bool
    paper_holds: Optional[bool] = None
    """
    Whether the printed right-hand side holds (`None` when `rhs_paper` is not reported).
    """

    notes: List[str] = []


def _notes(
    bound_id: BoundId,
    x: BoundInputs,
    values: BoundValues,
    paper_holds: Optional[bool],
) -> List[str]:
    notes: List[str] = []
    if bound_id == BoundId.C3_2 and x.triangles[0] > 0:
        notes.append(
            f"The printed sum of cubes 3M1+F+6t = {x.cube_sum_paper()[0]:.0f} differs from "
            f"trace(L^3) = 3M1+F-6t = {x.cube_sum_corrected()[0]:.0f} "
            f"(t = {x.triangles[0]:.0f}); holds is judged on the corrected value",
        )
    if bound_id == BoundId.T4_3 and values.rhs_paper is not None:
        if paper_holds is False:
            notes.append(
                f"The printed right-hand side {values.rhs_paper[0]:.12g} is violated; "
                f"the sharp constant n^2 floor((n-1)^2/4) gives {values.rhs[0]:.12g}",
            )
        elif x.n % 2 == 1:
            notes.append(
                "For odd n the printed constant is smaller than the sharp constant "
                "n^2 floor((n-1)^2/4); holds is judged on the sharp constant",
            )
    return notes


def _check(
    bound_id: BoundId,
    g: Graph,
    inputs: Optional[BoundInputs],
    settings: Optional[BhixSettings],
    p: Optional[float] = None,
) -> BoundReport:
    if bound_id == BoundId.T3_3 and (p is None or p <= 0):
        raise NonPositiveP(f"The power-sum bound needs p > 0, got p={p}")
    x = inputs or BoundInputs.of_graph(g, spectrum(g, settings=settings))
    min_order = MIN_ORDER.get(bound_id, 2)
    if x.n < min_order:
        raise TooSmall(f"Bound {bound_id} needs at least {min_order} vertices, got {g!r}")
    values = evaluate(bound_id, x, p)
    judgement = judge(bound_id, values.lhs, values.rhs, settings)
    paper_holds: Optional[bool] = None
    if values.rhs_paper is not None:
        paper_holds = bool(judge(bound_id, values.lhs, values.rhs_paper, settings).holds[0])
    report = BoundReport(
        bound_id=bound_id,
        p=p,
        lhs=float(values.lhs[0]),
        rhs=float(values.rhs[0]),
        rhs_paper=float(values.rhs_paper[0]) if values.rhs_paper is not None else None,
        holds=bool(judgement.holds[0]),
        slack=float(judgement.slack[0]),
        equality=bool(judgement.equality[0]),
        paper_holds=paper_holds,
        notes=_notes(bound_id, x, values, paper_holds),
    )
    for note in report.notes:
        logger.warning("%r %s: %s", g, bound_id, note)
    if not report.holds:
        logger.error("%r violates %s: lhs=%.12g rhs=%.12g", g, bound_id, report.lhs, report.rhs)
    return report


def check_t3_1(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `BH <= n (n-1)^2 / (4 (2m + M1)) * (r_L + 1/r_L)^2`.
    """

    return _check(BoundId.T3_1, g, inputs, settings)


def check_t3_2(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `BH <= n (n-1)^2 / (4 (2m + M1)) * (4 + (r_L - 1/r_L)^2)`.
    """

    return _check(BoundId.T3_2, g, inputs, settings)


def check_t3_3(
    g: Graph,
    p: float,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `BH >= n ((2m)^(p+1) / sum lambda_i^(3p+1))^(1/p)`, with equality exactly on complete graphs.

    Raises:
        NonPositiveP: `p <= 0`.
    """

    return _check(BoundId.T3_3, g, inputs, settings, p=p)


def check_c3_1(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `BH >= 16 n m^4 / (2m + M1)^3`.
    """

    return _check(BoundId.C3_1, g, inputs, settings)


def check_c3_2(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `BH >= sqrt(32 n^2 m^5 / (sum lambda_i^3)^3)`.

    Reported with two right-hand sides: `rhs` uses `sum lambda_i^3 = 3M1 + F - 6t`,
    and `rhs_paper` the printed `3M1 + F + 6t`. Validity is judged on `rhs`.
    """

    return _check(BoundId.C3_2, g, inputs, settings)


def check_t4_1(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `BH <= (1/lambda_2 + 1/lambda_n) Kf - n (n-1) / (lambda_2 lambda_n)`, with equality
    exactly when `lambda_2..lambda_n` take at most two distinct values.
    """

    return _check(BoundId.T4_1, g, inputs, settings)


def check_t4_2(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> Tuple[BoundReport, BoundReport]:
    """
    Two-sided bound of `BH` by `Kf^2` and the spanning tree count.

    Raises:
        TooSmall: The graph has fewer than 3 vertices.

    Returns:
        Tuple of the lower and upper bound reports
    """

    return (
        _check(BoundId.T4_2_lower, g, inputs, settings),
        _check(BoundId.T4_2_upper, g, inputs, settings),
    )


def check_t4_3(
    g: Graph,
    *,
    inputs: Optional[BoundInputs] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundReport:
    """
    `|n (n-1) BH - Kf^2| <= C(n) (1/lambda_2 - 1/lambda_n)^2`.

    `rhs` uses the sharp constant `C(n) = n^2 floor((n-1)^2 / 4)`;
    `rhs_paper` uses the printed `n^2 (n-1)^2 / 4 * (1 - (1 + (-1)^(n+1)) / (2 n^2))`,
    which is violated by some graphs of odd order (e.g. the path on 3 vertices).
    """

    return _check(BoundId.T4_3, g, inputs, settings)


def check_all(
    g: Graph,
    p_grid: Sequence[float] = DEFAULT_P_GRID,
    settings: Optional[BhixSettings] = None,
) -> List[BoundReport]:
    """
    Evaluate every bound on a graph, with `T3_3` at each exponent of `p_grid`.

    The two-sided spanning tree bound is skipped on graphs with fewer than 3 vertices.

    Args:
        g (Graph): Connected graph on at least 2 vertices.
        p_grid (Sequence[float], optional): Exponents for `T3_3`.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Returns:
        List of bound reports
    """

    inputs = BoundInputs.of_graph(g, spectrum(g, settings=settings))
    reports = [
        check_t3_1(g, inputs=inputs, settings=settings),
        check_t3_2(g, inputs=inputs, settings=settings),
        *(check_t3_3(g, p, inputs=inputs, settings=settings) for p in p_grid),
        check_c3_1(g, inputs=inputs, settings=settings),
        check_c3_2(g, inputs=inputs, settings=settings),
        check_t4_1(g, inputs=inputs, settings=settings),
    ]
    if g.n >= MIN_ORDER[BoundId.T4_2_lower]:
        reports.extend(check_t4_2(g, inputs=inputs, settings=settings))
    reports.append(check_t4_3(g, inputs=inputs, settings=settings))
    logger.debug(
        "%r: %i bounds checked, %i hold, %i with equality",
        g,
        len(reports),
        sum(r.holds for r in reports),
        sum(r.equality for r in reports),
    )
    return reports


def bound_plan(n: int, p_grid: Sequence[float]) -> List[Tuple[BoundId, Optional[float]]]:
    """
    The `(bound, p)` pairs evaluated on graphs of order `n`, in report order.
    """

    plan: List[Tuple[BoundId, Optional[float]]] = [(BoundId.T3_1, None), (BoundId.T3_2, None)]
    plan.extend((BoundId.T3_3, p) for p in p_grid)
    plan.extend([(BoundId.C3_1, None), (BoundId.C3_2, None), (BoundId.T4_1, None)])
    if n >= MIN_ORDER[BoundId.T4_2_lower]:
        plan.extend([(BoundId.T4_2_lower, None), (BoundId.T4_2_upper, None)])
    plan.append((BoundId.T4_3, None))
    return plan


def bound_key(bound_id: BoundId, p: Optional[float]) -> str:
    """
    Stable tally key of a bound, e.g. `T3_3[p=0.333333]`.
    """

    return f"{bound_id.value}[p={p:.6g}]" if p is not None else bound_id.value


SWEEP_MAX_N = 8
MAX_RECORDED = 100


class BoundTally(BaseModel):
    """
    Outcome counts of one bound over an exhaustive sweep.
    """

    checked: int = 0
    holds: int = 0
    equality: int = 0
    paper_violations: int = 0
    """
    Graphs on which the printed right-hand side is violated (`C3_2` and `T4_3` only).
    """

    def merge(self, other: BoundTally) -> BoundTally:
        return BoundTally(
            checked=self.checked + other.checked,
            holds=self.holds + other.holds,
            equality=self.equality + other.equality,
            paper_violations=self.paper_violations + other.paper_violations,
        )


class BoundViolation(BaseModel):
    graph6: str
    bound: str
    lhs: float
    rhs: float


class BoundSweepReport(BaseModel):
    """
    Bounds evaluated on every connected labelled graph of one order.
    """

    model_config = ConfigDict(use_attribute_docstrings=True)

    n: int
    masks: int
    """
    Number of adjacency masks enumerated.
    """

    connected_graphs: int
    p_grid: List[float]
    tallies: Dict[str, BoundTally]
    violations: List[BoundViolation] = []
    """
    Violations of the sound right-hand sides (at most 100 are recorded).
    """

    violation_count: int = 0
    equality_mismatches: List[str] = []
    """
    Graphs whose equality flags disagree with the expected equality cases:
    complete graphs for the power-sum and Zagreb lower bounds, and graphs with at most
    two distinct nonzero Laplacian eigenvalues for `T4_1`.
    """

    equality_mismatch_count: int = 0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def all_hold(self) -> bool:
        return self.violation_count == 0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def equality_certified(self) -> bool:
        return self.equality_mismatch_count == 0

    def merge(self, other: BoundSweepReport) -> BoundSweepReport:
        return BoundSweepReport(
            n=self.n,
            masks=self.masks + other.masks,
            connected_graphs=self.connected_graphs + other.connected_graphs,
            p_grid=self.p_grid,
            tallies={
                key: tally.merge(other.tallies[key]) if key in other.tallies else tally
                for key, tally in self.tallies.items()
            },
            violations=(self.violations + other.violations)[:MAX_RECORDED],
            violation_count=self.violation_count + other.violation_count,
            equality_mismatches=(self.equality_mismatches + other.equality_mismatches)[
                :MAX_RECORDED
            ],
            equality_mismatch_count=self.equality_mismatch_count + other.equality_mismatch_count,
        )


COMPLETE_EQUALITY_BOUNDS = frozenset([BoundId.T3_3, BoundId.C3_1, BoundId.C3_2])


def batch_inputs(batch: Batch, settings: BhixSettings) -> BoundInputs:
    """
    Bound inputs of a batch of connected graphs, with batched eigensolves.
    """

    n = batch.n
    degrees = batch.degrees
    a = batch.adjacency.astype(np.float64)
    eigenvalues = spectra_batch(batch.laplacians, settings.zero_tolerance)[:, 1:]
    return BoundInputs(
        n=n,
        m=degrees.sum(axis=1) / 2,
        m1=np.sum(degrees**2, axis=1),
        f=np.sum(degrees**3, axis=1),
        triangles=np.rint(np.einsum("kij,kji->k", a @ a, a) / 6),
        log_n_tau=np.log(n * spanning_tree_counts(batch.laplacians)),
        eigenvalues=eigenvalues,
    )


def _two_valued(eigenvalues: np.ndarray) -> np.ndarray:
    scale = 1e-7 * eigenvalues[:, -1:]
    near_low = np.abs(eigenvalues - eigenvalues[:, :1]) <= scale
    near_high = np.abs(eigenvalues - eigenvalues[:, -1:]) <= scale
    return np.all(near_low | near_high, axis=1)


def _sweep_shard(
    shard: Tuple[int, int, int, Tuple[float, ...], BhixSettings],
) -> BoundSweepReport:
    n, start, stop, p_grid, settings = shard
    batch = connected_batch(n, start, stop)
    report = BoundSweepReport(
        n=n,
        masks=stop - start,
        connected_graphs=int(batch.masks.size),
        p_grid=list(p_grid),
        tallies={bound_key(b, p): BoundTally() for b, p in bound_plan(n, p_grid)},
    )
    if batch.masks.size == 0:
        return report
    x = batch_inputs(batch, settings)
    complete = x.m == n * (n - 1) / 2
    two_valued = _two_valued(x.eigenvalues)
    violations: List[BoundViolation] = []
    mismatches: List[str] = []
    violation_count = 0
    mismatch_count = 0
    for bound_id, p in bound_plan(n, p_grid):
        key = bound_key(bound_id, p)
        values = evaluate(bound_id, x, p)
        judgement = judge(bound_id, values.lhs, values.rhs, settings)
        paper_violations = 0
        if values.rhs_paper is not None:
            paper = judge(bound_id, values.lhs, values.rhs_paper, settings)
            paper_violations = int(np.count_nonzero(~paper.holds))
        report.tallies[key] = BoundTally(
            checked=int(batch.masks.size),
            holds=int(np.count_nonzero(judgement.holds)),
            equality=int(np.count_nonzero(judgement.equality)),
            paper_violations=paper_violations,
        )
        failed = np.flatnonzero(~judgement.holds)
        violation_count += int(failed.size)
        for i in failed[: MAX_RECORDED - len(violations)]:
            violations.append(
                BoundViolation(
                    graph6=encode_graph6(graph_from_mask(n, int(batch.masks[i]))),
                    bound=key,
                    lhs=float(values.lhs[i]),
                    rhs=float(values.rhs[i]),
                ),
            )
        expected: Optional[np.ndarray] = None
        if bound_id in COMPLETE_EQUALITY_BOUNDS:
            expected = complete
        elif bound_id == BoundId.T4_1:
            expected = two_valued
        if expected is not None:
            wrong = np.flatnonzero(judgement.equality != expected)
            mismatch_count += int(wrong.size)
            for i in wrong[: MAX_RECORDED - len(mismatches)]:
                graph6 = encode_graph6(graph_from_mask(n, int(batch.masks[i])))
                mismatches.append(f"{graph6} {key}")
    return report.model_copy(
        update={
            "violations": violations,
            "violation_count": violation_count,
            "equality_mismatches": mismatches,
            "equality_mismatch_count": mismatch_count,
        },
    )


def sweep_bounds(
    n: int,
    p_grid: Sequence[float] = DEFAULT_P_GRID,
    workers: Optional[int] = None,
    settings: Optional[BhixSettings] = None,
) -> BoundSweepReport:
    """
    Evaluate every bound on every connected labelled graph on `n` vertices.

    The adjacency mask space is split into ranges, processed in batches
    (in parallel when `workers > 1`) and merged in range order.

    Args:
        n (int): Vertex count (`2 <= n <= 8`).
        p_grid (Sequence[float], optional): Exponents for `T3_3`.
        workers (Optional[int], optional): Worker processes. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        TooSmall: `n < 2`.
        TooLarge: `n > 8`.
        NonPositiveP: A grid exponent is not positive.

    Returns:
        Sweep report
    """

    settings = settings or default_settings
    if n < 2:
        raise TooSmall(f"Bound sweeps need at least 2 vertices, got n={n}")
    if n > SWEEP_MAX_N:
        raise TooLarge(f"Exhaustive bound sweeps are capped at n={SWEEP_MAX_N}, got n={n}")
    for p in p_grid:
        if p <= 0:
            raise NonPositiveP(f"The power-sum bound needs p > 0, got p={p}")
    workers = workers or settings.workers
    shards = [(n, start, stop, tuple(p_grid), settings) for start, stop in mask_ranges(n)]
    logger.info(
        "Sweeping bounds over %i masks of order %i (%i shards)",
        mask_count(n),
        n,
        len(shards),
    )
    report: Optional[BoundSweepReport] = None
    for partial in run_sharded(_sweep_shard, shards, workers):
        report = partial if report is None else report.merge(partial)
    assert report is not None
    logger.info(
        "Order %i: %i connected graphs, %i violations, %i equality mismatches",
        n,
        report.connected_graphs,
        report.violation_count,
        report.equality_mismatch_count,
    )
    return report
