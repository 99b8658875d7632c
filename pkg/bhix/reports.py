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
Rendering of command results as JSON, CSV or text, and validation of saved JSON output.

JSON is the canonical format: floats are written with 12 significant digits,
exact rationals as `"p/q"` strings.
"""

from __future__ import annotations

import csv
import io
import json
import math

from logging import getLogger
from typing import Any, Dict, List, Sequence, Union

from pydantic import BaseModel, TypeAdapter, ValidationError

from .bounds import BoundReport, BoundSweepReport
from .exceptions import InvalidInput
from .extremal import Diameter2Report, DiameterBoundReport, FamilyVerificationReport, ScanReport
from .graph import StructureReport
from .indices import IndexReport
from .operations import ProductReport
from .types import BaseEnum, OutputFormat

logger = getLogger(__name__)

SIGNIFICANT_DIGITS = 12

Result = Union[BaseModel, Sequence[BaseModel]]


class OutputKind(BaseEnum):
    """
    Kinds of saved command output that can be validated.
    """

    compute = "compute"
    structure = "structure"
    bounds = "bounds"
    bounds_sweep = "bounds-sweep"
    scan_trees = "scan-trees"
    scan_diameter2 = "scan-diameter2"
    scan_t52 = "scan-t52"
    scan_families = "scan-families"
    product = "product"


OUTPUT_SCHEMAS: Dict[OutputKind, TypeAdapter[Any]] = {
    OutputKind.compute: TypeAdapter(IndexReport),
    OutputKind.structure: TypeAdapter(StructureReport),
    OutputKind.bounds: TypeAdapter(List[BoundReport]),
    OutputKind.bounds_sweep: TypeAdapter(BoundSweepReport),
    OutputKind.scan_trees: TypeAdapter(ScanReport),
    OutputKind.scan_diameter2: TypeAdapter(Diameter2Report),
    OutputKind.scan_t52: TypeAdapter(DiameterBoundReport),
    OutputKind.scan_families: TypeAdapter(FamilyVerificationReport),
    OutputKind.product: TypeAdapter(ProductReport),
}


def _round(value: Any) -> Any:
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, dict):
        return {key: _round(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_round(item) for item in value]
    return value


def to_data(result: Result) -> Any:
    """
    JSON-compatible data of a result, with floats rounded to 12 significant digits.
    """

    if isinstance(result, BaseModel):
        return _round(result.model_dump(mode="json"))
    return [to_data(item) for item in result]


def _flatten(data: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    row: Dict[str, Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            row.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            row[name] = json.dumps(value)
        else:
            row[name] = value
    return row


def to_rows(result: Result) -> List[Dict[str, Any]]:
    """
    Flatten a result into CSV rows.

    Lists of reports give one row per report, and exhaustive bound sweeps one row per bound.
    Any other report is flattened into a single row, with nested lists JSON-encoded.
    """

    if not isinstance(result, BaseModel):
        return [_flatten(to_data(item)) for item in result]
    if isinstance(result, BoundSweepReport):
        data = to_data(result)
        return [
            {"n": result.n, "bound": key, **tally, "connected_graphs": result.connected_graphs}
            for key, tally in data["tallies"].items()
        ]
    return [_flatten(to_data(result))]


def render(result: Result, output_format: OutputFormat = "json") -> str:
    """
    Render a result in the requested output format.

    Args:
        result (Result): Report model, or sequence of report models.
        output_format (OutputFormat, optional): `json`, `csv` or `text`.

    Returns:
        Rendered output, ending with a newline
    """

    if output_format == "json":
        return json.dumps(to_data(result), indent=2) + "\n"
    rows = to_rows(result)
    if output_format == "csv":
        buffer = io.StringIO()
        fieldnames: List[str] = []
        for row in rows:
            fieldnames.extend(key for key in row if key not in fieldnames)
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()
    blocks = ["\n".join(f"{key}: {value}" for key, value in row.items()) for row in rows]
    return "\n\n".join(blocks) + "\n"


def validate_output(kind: Union[OutputKind, str], text: str) -> Any:
    """
    Validate saved JSON output against the schema of its command.

    Args:
        kind (Union[OutputKind, str]): Output kind, e.g. `compute` or `scan-trees`.
        text (str): JSON document.

    Raises:
        InvalidInput: The document does not match the schema.

    Returns:
        Parsed report model (or list of models)
    """

    output_kind = kind if isinstance(kind, OutputKind) else OutputKind.from_name_str(kind)
    try:
        parsed = OUTPUT_SCHEMAS[output_kind].validate_json(text)
    except ValidationError as err:
        raise InvalidInput(f"Output does not match the '{output_kind}' schema: {err}") from None
    logger.debug("Validated %s output", output_kind)
    return parsed
