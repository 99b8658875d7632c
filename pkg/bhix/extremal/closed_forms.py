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
Closed-form biharmonic indices of stars, double stars and fireflies, the factored
characteristic polynomials they are derived from, and their extreme values.
"""

from __future__ import annotations

from fractions import Fraction
from logging import getLogger
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, computed_field

from ..exceptions import TooLarge, TooSmall, UnsupportedFamily
from ..families import FamilyKind, FamilySpec, double_star_params, firefly_params, generate
from ..indices import bh_from_spectrum
from ..polynomial import IntPoly
from ..settings import settings as default_settings
from ..spectra import char_poly, spectrum
from ..sweep import run_sharded
from ..types import BaseEnum, Rational

if TYPE_CHECKING:
    from ..settings import BhixSettings

logger = getLogger(__name__)

FAMILY_MAX_N = 40
SHARD_SIZE = 64


class ClosedFormCase(BaseEnum):
    """
    Which closed form applies to a family member.
    """

    star = "star"
    double_star = "double-star"
    firefly_one_path = "firefly-one-path"
    """
    No triangles and a single pendant path.
    """

    firefly_paths = "firefly-paths"
    """
    No triangles and at least two pendant paths.
    """

    firefly_triangles = "firefly-triangles"
    """
    At least one triangle and no pendant paths.
    """

    firefly_mixed = "firefly-mixed"
    """
    At least one triangle and at least one pendant path.
    """


class ClosedForm(BaseModel):
    """
    Exact biharmonic index of a family member.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    family: FamilySpec
    value: Rational
    case_label: ClosedFormCase

    def __float__(self) -> float:
        return float(self.value)


def _firefly_case(s: int, t: int) -> ClosedFormCase:
    if s == 0:
        if t == 0:
            return ClosedFormCase.star
        return ClosedFormCase.firefly_one_path if t == 1 else ClosedFormCase.firefly_paths
    return ClosedFormCase.firefly_triangles if t == 0 else ClosedFormCase.firefly_mixed


def _firefly_bh(n: int, s: int, t: int) -> Fraction:
    # Reduces to n^2 - 2n + 1/n for stars, and to n^2 + 3n - 16 + 4/n for t = 1.
    return (
        n * n
        - Fraction(8, 9) * s * n
        - 2 * n
        + Fraction(9 * t * t + (5 * n * n - 16 * n - 6) * t + 1, n)
    )


def _double_star_bh(n: int, a: int, b: int) -> Fraction:
    return n * n - 2 * n + 4 * a * b + Fraction((a * b + 1) ** 2, n)


def closed_form_bh(spec: FamilySpec) -> ClosedForm:
    """
    Exact biharmonic index of a star, double star or firefly.

    Args:
        spec (FamilySpec): Family member.

    Raises:
        UnsupportedFamily: The family has no closed form (path, cycle, complete, empty).

    Returns:
        Closed form value and the case that produced it
    """

    n = spec.order
    if spec.kind == FamilyKind.star:
        value = _firefly_bh(n, 0, 0)
        case = ClosedFormCase.star
    elif spec.kind == FamilyKind.double_star:
        value = _double_star_bh(n, spec.a or 0, spec.b or 0)
        case = ClosedFormCase.double_star
    elif spec.kind == FamilyKind.firefly:
        s, t = spec.s or 0, spec.t or 0
        value = _firefly_bh(n, s, t)
        case = _firefly_case(s, t)
    else:
        raise UnsupportedFamily(
            f"No closed form for the '{spec.kind}' family; compute it spectrally instead",
        )
    return ClosedForm(family=spec, value=Rational(value), case_label=case)


def factorization(spec: FamilySpec) -> List[Tuple[IntPoly, int]]:
    """
    Factored Laplacian characteristic polynomial of a star, double star or firefly,
    as `(factor, exponent)` pairs.

    An exponent may be `-1` (pendant path fireflies without pendant edges), in which
    case the factor divides the remaining product.

    Raises:
        UnsupportedFamily: The family has no factored form.
    """

    x = IntPoly.x()
    n = spec.order
    if spec.kind == FamilyKind.double_star:
        ab = (spec.a or 0) * (spec.b or 0)
        cubic = IntPoly([-n, 2 * n + ab + 1, -(n + 2), 1])
        return [(x, 1), (IntPoly.linear(1), n - 4), (cubic, 1)]
    if spec.kind == FamilyKind.star:
        s, t = 0, 0
    elif spec.kind == FamilyKind.firefly:
        s, t = spec.s or 0, spec.t or 0
    else:
        raise UnsupportedFamily(f"No factored form for the '{spec.kind}' family")
    if n == 1:
        return [(x, 1)]
    if t == 0:
        return [
            (x, 1),
            (IntPoly.linear(n), 1),
            (IntPoly.linear(3), s),
            (IntPoly.linear(1), n - s - 2),
        ]
    cubic = IntPoly([-n, 3 * n - 3 * t + 1, -(n - t + 3), 1])
    return [
        (x, 1),
        (IntPoly.linear(3), s),
        (IntPoly.linear(1), n - s - 2 * t - 2),
        (IntPoly([1, -3, 1]), t - 1),
        (cubic, 1),
    ]


def factorization_holds(spec: FamilySpec) -> bool:
    """
    Whether the exact characteristic polynomial equals the factored form.
    """

    lhs: IntPoly = char_poly(generate(spec))
    rhs = IntPoly.constant(1)
    for factor, exponent in factorization(spec):
        if exponent >= 0:
            rhs = rhs * factor**exponent
        else:
            lhs = lhs * factor**-exponent
    return lhs == rhs


def factored_bh(spec: FamilySpec) -> Fraction:
    """
    Exact biharmonic index from the factored characteristic polynomial,
    summing `1/r^2` over the roots of every factor other than `x` by Vieta's formulas.
    """

    total = Fraction(0)
    for factor, exponent in factorization(spec):
        if factor == IntPoly.x():
            continue
        total += exponent * factor.reciprocal_root_sums()[1]
    return spec.order * total


class ExtremeCheck(BaseModel):
    """
    Displayed extreme values of a family's biharmonic index at one order,
    compared with the extremes of the closed form over every valid parameter.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    family: ClosedFormCase
    n: int
    stated_min: Rational
    stated_max: Rational
    observed_min: Rational
    observed_max: Rational
    stated_min_witness: str
    stated_max_witness: str
    observed_min_witnesses: List[str]
    """
    Labels of every family member attaining the minimum.
    """

    observed_max_witnesses: List[str]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def values_match(self) -> bool:
        return self.stated_min == self.observed_min and self.stated_max == self.observed_max

    @computed_field  # type: ignore[prop-decorator]
    @property
    def witnesses_match(self) -> bool:
        return (
            self.stated_min_witness in self.observed_min_witnesses
            and self.stated_max_witness in self.observed_max_witnesses
        )


def _extreme_check(
    case: ClosedFormCase,
    n: int,
    specs: Sequence[FamilySpec],
    stated: Tuple[Fraction, str, Fraction, str],
) -> ExtremeCheck:
    values = {spec.label(): closed_form_bh(spec).value for spec in specs}
    low = min(values.values())
    high = max(values.values())
    check = ExtremeCheck(
        family=case,
        n=n,
        stated_min=Rational(stated[0]),
        stated_min_witness=stated[1],
        stated_max=Rational(stated[2]),
        stated_max_witness=stated[3],
        observed_min=Rational(low),
        observed_max=Rational(high),
        observed_min_witnesses=[label for label, value in values.items() if value == low],
        observed_max_witnesses=[label for label, value in values.items() if value == high],
    )
    if not check.values_match:
        logger.error("%s extremes at n=%i do not match: %r", case, n, check)
    elif not check.witnesses_match:
        logger.info(
            "%s extremes at n=%i: stated witnesses %s/%s, attained at %s/%s",
            case,
            n,
            check.stated_min_witness,
            check.stated_max_witness,
            check.observed_min_witnesses,
            check.observed_max_witnesses,
        )
    return check


def double_star_extremes(n: int) -> ExtremeCheck:
    """
    Minimum and maximum biharmonic index over the double stars `S(a, b)` with `a + b = n - 2`:
    `n^2 + 3n - 16 + 4/n` at `S(1, n-3)`, and the balanced double star at the top.

    Raises:
        TooSmall: `n < 4`.
    """

    if n < 4:
        raise TooSmall(f"Double stars need at least 4 vertices, got n={n}")
    specs = [FamilySpec(kind=FamilyKind.double_star, **params) for params in double_star_params(n)]
    a, b = (n - 2) // 2, n - 2 - (n - 2) // 2
    stated = (
        n * n + 3 * n - 16 + Fraction(4, n),
        f"S(1,{n - 3})",
        _double_star_bh(n, a, b),
        f"S({a},{b})",
    )
    return _extreme_check(ClosedFormCase.double_star, n, specs, stated)


def _firefly_specs(n: int, predicate: Callable[[int, int], bool]) -> List[FamilySpec]:
    return [
        FamilySpec(kind=FamilyKind.firefly, **params)
        for params in firefly_params(n)
        if predicate(params["s"], params["t"])
    ]


def _label(s: int, t: int, q: int) -> str:
    return f"F({s},{t},{q})"


def firefly_extremes(n: int) -> List[ExtremeCheck]:
    """
    Displayed extreme values of the firefly biharmonic index for each kind of firefly
    (pendant paths only, triangles only, both), compared with the closed form
    minimised and maximised over every valid parameter.

    The displayed witnesses of the triangles-only case are swapped: the index decreases
    with the number of triangles, so the minimum is attained at the most triangles.

    Raises:
        TooSmall: `n < 7`.
    """

    if n < 7:
        raise TooSmall(f"Firefly extremes are stated for n >= 7, got n={n}")
    nn = Fraction(n * n)
    r = Fraction(1, n)
    if n % 2 == 1:
        paths_max = 7 * nn / 2 - Fraction(41, 4) * n + 25 * r / 4 + Fraction(1, 2)
        paths_max_at = _label(0, (n - 1) // 2, 0)
        triangles_min = 5 * nn / 9 - Fraction(14, 9) * n + r
        triangles_max_at = _label((n - 1) // 2, 0, 0)
        mixed_min = 5 * nn / 9 + Fraction(13, 3) * n + 4 * r - 16
        mixed_min_at = _label((n - 3) // 2, 1, 0)
        mixed_max = 7 * nn / 2 - Fraction(581, 36) * n + 121 * r / 4 + Fraction(15, 2)
        mixed_max_at = _label(1, (n - 3) // 2, 0)
    else:
        paths_max = 7 * nn / 2 - Fraction(51, 4) * n + 16 * r + 4
        paths_max_at = _label(0, (n - 2) // 2, 1)
        triangles_min = 5 * nn / 9 - Fraction(10, 9) * n + r
        triangles_max_at = _label((n - 2) // 2, 0, 1)
        mixed_min = 5 * nn / 9 + Fraction(43, 9) * n + 4 * r - 16
        mixed_min_at = _label((n - 4) // 2, 1, 1)
        mixed_max = 7 * nn / 2 - Fraction(671, 36) * n + 49 * r + 11
        mixed_max_at = _label(1, (n - 4) // 2, 1)
    paths_min = (nn + 8 * n + 25 * r - 32, _label(0, 2, n - 5))
    return [
        _extreme_check(
            ClosedFormCase.firefly_paths,
            n,
            _firefly_specs(n, lambda s, t: s == 0 and t >= 2),
            (*paths_min, paths_max, paths_max_at),
        ),
        _extreme_check(
            ClosedFormCase.firefly_triangles,
            n,
            _firefly_specs(n, lambda s, t: s >= 1 and t == 0),
            (triangles_min, _label(1, 0, n - 3), nn - Fraction(26, 9) * n + r, triangles_max_at),
        ),
        _extreme_check(
            ClosedFormCase.firefly_mixed,
            n,
            _firefly_specs(n, lambda s, t: s >= 1 and t >= 1),
            (mixed_min, mixed_min_at, mixed_max, mixed_max_at),
        ),
    ]


class FamilyVerificationReport(BaseModel):
    """
    Outcome of checking every star, double star and firefly up to `n_max` vertices.
    """

    model_config = ConfigDict(use_attribute_docstrings=True)

    n_max: int
    families_checked: int
    factorization_failures: List[str] = []
    """
    Members whose characteristic polynomial differs from the factored form.
    """

    closed_form_failures: List[str] = []
    """
    Members whose closed form differs from the index derived from the factored form.
    """

    spectral_failures: List[str] = []
    """
    Members whose closed form differs from the spectral index beyond the relative tolerance.
    """

    extremes: List[ExtremeCheck] = []

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verified(self) -> bool:
        return (
            not self.factorization_failures
            and not self.closed_form_failures
            and not self.spectral_failures
            and all(check.values_match for check in self.extremes)
        )


def family_members(n_max: int) -> List[FamilySpec]:
    """
    Every star, double star and firefly on `3..n_max` vertices.
    """

    specs: List[FamilySpec] = []
    for n in range(3, n_max + 1):
        specs.append(FamilySpec(kind=FamilyKind.star, n=n))
        specs.extend(
            FamilySpec(kind=FamilyKind.double_star, a=a, b=n - 2 - a) for a in range(1, n - 2)
        )
        specs.extend(FamilySpec(kind=FamilyKind.firefly, **params) for params in firefly_params(n))
    return specs


def _verify_shard(shard: Tuple[List[FamilySpec], BhixSettings]) -> Dict[str, List[str]]:
    specs, settings = shard
    failures: Dict[str, List[str]] = {"factorization": [], "closed_form": [], "spectral": []}
    for spec in specs:
        label = spec.label()
        closed = closed_form_bh(spec).value
        if not factorization_holds(spec):
            failures["factorization"].append(label)
        if factored_bh(spec) != closed:
            failures["closed_form"].append(label)
        spectral = bh_from_spectrum(spectrum(generate(spec), method="lapack", settings=settings))
        if abs(spectral - float(closed)) > settings.tolerance * max(1.0, float(closed)):
            failures["spectral"].append(
                f"{label}: closed form {float(closed)!r}, spectral {spectral!r}",
            )
    return failures


def verify_family_factorizations(
    n_max: int,
    workers: Optional[int] = None,
    settings: Optional[BhixSettings] = None,
) -> FamilyVerificationReport:
    """
    Check every star, double star and firefly on at most `n_max` vertices three ways:
    the exact characteristic polynomial against its factored form, the closed form
    against the index derived exactly from the factored form, and the closed form
    against the spectral index. The displayed extreme values are checked for every order.

    Args:
        n_max (int): Largest order checked (`3 <= n_max <= 40`).
        workers (Optional[int], optional): Worker processes. Defaults to the settings value.
        settings (Optional[BhixSettings], optional): Numerical settings.

    Raises:
        TooSmall: `n_max < 3`.
        TooLarge: `n_max > 40`.

    Returns:
        Verification report
    """

    settings = settings or default_settings
    if n_max < 3:
        raise TooSmall(f"Family verification needs n_max >= 3, got {n_max}")
    if n_max > FAMILY_MAX_N:
        raise TooLarge(f"Family verification is capped at n_max={FAMILY_MAX_N}, got {n_max}")
    specs = family_members(n_max)
    shards = [(specs[i : i + SHARD_SIZE], settings) for i in range(0, len(specs), SHARD_SIZE)]
    logger.info("Verifying %i family members up to n=%i", len(specs), n_max)
    failures: Dict[str, List[str]] = {"factorization": [], "closed_form": [], "spectral": []}
    for partial in run_sharded(_verify_shard, shards, workers or settings.workers):
        for key, labels in partial.items():
            failures[key].extend(labels)
    extremes = [double_star_extremes(n) for n in range(4, n_max + 1)]
    for n in range(7, n_max + 1):
        extremes.extend(firefly_extremes(n))
    report = FamilyVerificationReport(
        n_max=n_max,
        families_checked=len(specs),
        factorization_failures=failures["factorization"],
        closed_form_failures=failures["closed_form"],
        spectral_failures=failures["spectral"],
        extremes=extremes,
    )
    logger.info("Family verification up to n=%i: verified=%s", n_max, report.verified)
    return report
