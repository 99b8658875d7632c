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
bhix configuration models.
"""

from __future__ import annotations

import os

from logging import getLogger
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List, Optional

import json5  # type: ignore[import]

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from .types import EigenSolver, OutputFormat, PositiveFloat, PositiveInt

if TYPE_CHECKING:
    from typing_extensions import Self

logger = getLogger(__name__)

TOLERANCE_ENV_VAR = "BHIX_TOLERANCE"

DEFAULT_P_GRID = (1 / 3, 2 / 3, 1.0, 2.0)


def _default_workers() -> int:
    return os.cpu_count() or 1


class BhixSettings(BaseModel):
    """
    Numerical settings shared by every computation.

    ```python
    from bhix.settings import BhixSettings

    settings = BhixSettings.from_env()
    ```
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    tolerance: PositiveFloat = 1e-8
    """
    Relative tolerance used when comparing two routes to the same quantity,
    e.g. the spectral and distance-sum biharmonic index.

    Overridden by the `BHIX_TOLERANCE` environment variable.
    """

    zero_tolerance: PositiveFloat = 1e-9
    """
    Absolute threshold below which a Laplacian eigenvalue is clamped to exactly zero.
    """

    holds_tolerance: PositiveFloat = 1e-9
    """
    Relative slack allowed before a bound is reported as violated.
    """

    equality_tolerance: PositiveFloat = 1e-7
    """
    Relative slack under which a bound is reported as attained with equality.
    """

    eigensolver: EigenSolver = "jacobi"
    """
    Eigensolver used for single-graph computations.

    Values:

    * `jacobi` - cyclic Jacobi rotations on the dense Laplacian
    * `lapack` - `numpy.linalg.eigh`
    """

    sweep_eigensolver: EigenSolver = "lapack"
    """
    Eigensolver used for batch scans over many graphs.
    """

    workers: PositiveInt = Field(default_factory=_default_workers)
    """
    Number of worker processes used by exhaustive sweeps and scans.
    """

    @classmethod
    def from_env(cls, **overrides: Any) -> Self:
        """
        Create a settings object, applying environment variable overrides.

        Args:
            **overrides (Any): Explicit values, which take precedence over the environment.

        Returns:
            Settings object
        """

        values: Dict[str, Any] = {}
        env_tolerance = os.environ.get(TOLERANCE_ENV_VAR)
        if env_tolerance:
            logger.debug("%s=%s", TOLERANCE_ENV_VAR, env_tolerance)
            values["tolerance"] = env_tolerance
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


def _default_settings() -> BhixSettings:
    try:
        return BhixSettings.from_env()
    except ValidationError as err:
        logger.warning(
            "Ignoring invalid %s=%r: %s",
            TOLERANCE_ENV_VAR,
            os.environ.get(TOLERANCE_ENV_VAR),
            err.errors()[0]["msg"],
        )
        return BhixSettings()


settings = _default_settings()
"""
Default settings, used when a function is not given an explicit settings object.
An invalid `BHIX_TOLERANCE` is ignored here; the command line rejects it.
"""


class RunConfig(BaseModel):
    """
    Validated command line invocation.

    Exactly one input source must be given: a graph6 string, a graph file,
    a family specification, or an exhaustive sweep.
    """

    model_config = ConfigDict(use_attribute_docstrings=True)

    command: str
    """
    Name of the command being run.
    """

    graph6: Optional[str] = None
    """
    Input graph as a graph6 string.
    """

    graph_file: Optional[Path] = None
    """
    Input graph as a file (graph6 if the suffix is `.g6`, otherwise an edge list).
    """

    family: Optional[Dict[str, Any]] = None
    """
    Input graph as a family specification (keyword arguments of `FamilySpec`).
    """

    exhaustive_n: Optional[PositiveInt] = None
    """
    Vertex count of an exhaustive sweep over all adjacency masks.
    """

    output_format: OutputFormat = "json"
    """
    Output format. JSON is the canonical format.
    """

    workers: PositiveInt = Field(default_factory=_default_workers)
    """
    Number of worker processes. `1` forces a deterministic sequential row order.
    """

    p_grid: List[PositiveFloat] = list(DEFAULT_P_GRID)
    """
    Exponents at which the power-sum lower bound is evaluated.
    """

    tolerance: Optional[PositiveFloat] = None
    """
    Override of the relative comparison tolerance.
    """

    @field_validator("p_grid", mode="before")
    @classmethod
    def validate_p_grid(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [_parse_p(item) for item in value.split(",") if item.strip()]
        return value

    @model_validator(mode="after")
    def validate_single_source(self) -> Self:
        sources = [
            name
            for name, value in (
                ("graph6", self.graph6),
                ("graph_file", self.graph_file),
                ("family", self.family),
                ("exhaustive_n", self.exhaustive_n),
            )
            if value is not None
        ]
        if len(sources) != 1:
            raise ValueError(
                f"Exactly one input source must be given, got {len(sources)}: {sources}",
            )
        return self

    def settings(self) -> BhixSettings:
        return BhixSettings.from_env(tolerance=self.tolerance, workers=self.workers)


def _parse_p(text: str) -> float:
    text = text.strip()
    if "/" in text:
        numerator, denominator = text.split("/", 1)
        return float(numerator) / float(denominator)
    return float(text)


def load_config_file(path: Path) -> Dict[str, Any]:
    """
    Load command line defaults from a JSON5 file.

    Args:
        path (Path): Path to the configuration file.

    Returns:
        Mapping of option names to default values
    """

    with path.open("r", encoding="utf-8") as f:
        data = json5.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"Configuration file '{path}' must contain an object")
    logger.debug("Loaded configuration defaults from '%s': %s", path, repr(data))
    return {str(key).replace("-", "_"): value for key, value in data.items()}
