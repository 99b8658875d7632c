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
Test the rendering and validation of command output.
"""

from __future__ import annotations

import csv
import io
import json

import pytest

from bhix.bounds import check_all, sweep_bounds
from bhix.exceptions import InvalidInput
from bhix.extremal import diameter2_scan
from bhix.families import family
from bhix.graph import structure_report
from bhix.indices import IndexReport, index_report
from bhix.reports import OutputKind, render, to_data, to_rows, validate_output


def test_render_json() -> None:
    """
    Check that JSON output rounds floats to 12 significant digits.
    """

    data = json.loads(render(index_report(family("complete", n=3))))
    assert data["bh_spectral"] == 0.666666666667
    assert data["tau"] == 3
    assert data["connected"] is True


def test_render_rational(settings) -> None:
    """
    Check that exact rationals are written as `p/q` strings.
    """

    data = to_data(diameter2_scan(4, settings=settings))
    assert data["star_bh"] == "33/4"
    assert data["verified"] is True


def test_to_data_non_finite() -> None:
    """
    Check that non-finite floats are written as `null`.
    """

    report = index_report(family("path", n=3)).model_copy(update={"spectral_ratio": float("inf")})
    assert to_data(report)["spectral_ratio"] is None


def test_render_csv_bounds() -> None:
    """
    Check that a list of bound reports gives one CSV row per bound.
    """

    text = render(check_all(family("cycle", n=5)), "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 12
    assert rows[0]["bound_id"] == "T3_1"
    assert {row["holds"] for row in rows} == {"True"}


def test_render_csv_sweep(settings) -> None:
    """
    Check that a bound sweep gives one CSV row per bound tally.
    """

    report = sweep_bounds(3, p_grid=[1.0], settings=settings)
    rows = to_rows(report)
    assert [row["bound"] for row in rows] == [
        "T3_1",
        "T3_2",
        "T3_3[p=1]",
        "C3_1",
        "C3_2",
        "T4_1",
        "T4_2_lower",
        "T4_2_upper",
        "T4_3",
    ]
    assert all(row["checked"] == 4 for row in rows)


def test_render_csv_nested() -> None:
    """
    Check that nested lists are JSON-encoded in a single CSV row.
    """

    rows = to_rows(structure_report(family("star", n=4)))
    assert len(rows) == 1
    assert json.loads(rows[0]["degree_sequence"]) == [3, 1, 1, 1]


def test_render_text() -> None:
    """
    Check the `key: value` text rendering.
    """

    text = render(structure_report(family("path", n=4)), "text")
    assert "diameter: 3\n" in text
    assert text.endswith("\n")


def test_validate_output_compute() -> None:
    """
    Check that rendered output validates against its schema.
    """

    parsed = validate_output("compute", render(index_report(family("star", n=5))))
    assert isinstance(parsed, IndexReport)
    assert parsed.bh_spectral == pytest.approx(15.2)


def test_validate_output_bounds() -> None:
    """
    Check that a rendered list of bound reports validates.
    """

    parsed = validate_output(OutputKind.bounds, render(check_all(family("complete", n=4))))
    assert len(parsed) == 12


def test_validate_output_scan(settings) -> None:
    """
    Check that scan output with computed fields and rationals validates.
    """

    parsed = validate_output("scan-diameter2", render(diameter2_scan(4, settings=settings)))
    assert parsed.star_bh == 33 / 4
    assert parsed.verified


@pytest.mark.parametrize(
    ("kind", "text"),
    [
        ("compute", "{}"),
        ("compute", "not json"),
        ("bounds", '{"bound_id": "T3_1"}'),
        ("structure", render(index_report(family("path", n=3)))),
    ],
)
def test_validate_output_invalid(kind, text) -> None:
    """
    Check that output not matching the schema is rejected.
    """

    with pytest.raises(InvalidInput):
        validate_output(kind, text)


def test_validate_output_unknown_kind() -> None:
    """
    Check that unknown output kinds are rejected.
    """

    with pytest.raises(ValueError):
        validate_output("unknown", "{}")
