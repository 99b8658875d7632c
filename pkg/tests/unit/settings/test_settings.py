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
Test the numerical settings and run configuration models.
"""

from __future__ import annotations

import logging

import pytest

from pydantic import ValidationError

from bhix.settings import (
    TOLERANCE_ENV_VAR,
    BhixSettings,
    RunConfig,
    _default_settings,
    load_config_file,
)


def test_settings_defaults(monkeypatch) -> None:
    """
    Check the default numerical settings.
    """

    monkeypatch.delenv(TOLERANCE_ENV_VAR, raising=False)
    settings = BhixSettings.from_env()
    assert settings.tolerance == 1e-8
    assert settings.eigensolver == "jacobi"
    assert settings.sweep_eigensolver == "lapack"
    assert settings.workers >= 1


def test_settings_env_override(monkeypatch) -> None:
    """
    Check that the tolerance environment variable is applied.
    """

    monkeypatch.setenv(TOLERANCE_ENV_VAR, "1e-6")
    assert BhixSettings.from_env().tolerance == 1e-6


def test_settings_explicit_override(monkeypatch) -> None:
    """
    Check that explicit values take precedence over the environment.
    """

    monkeypatch.setenv(TOLERANCE_ENV_VAR, "1e-6")
    settings = BhixSettings.from_env(tolerance=1e-4, workers=None)
    assert settings.tolerance == 1e-4


@pytest.mark.parametrize("values", [{"tolerance": 0}, {"workers": 0}, {"eigensolver": "qr"}])
def test_settings_invalid(values) -> None:
    """
    Check that invalid settings are rejected.
    """

    with pytest.raises(ValidationError):
        BhixSettings(**values)


def test_settings_frozen() -> None:
    """
    Check that settings objects are immutable.
    """

    settings = BhixSettings(workers=1)
    with pytest.raises(ValidationError):
        settings.workers = 2  # type: ignore[misc]


@pytest.mark.parametrize(
    ("p_grid", "expected"),
    [
        ("1", [1.0]),
        ("1/3, 2/3,1,2", [1 / 3, 2 / 3, 1.0, 2.0]),
        ([0.5, 3], [0.5, 3.0]),
    ],
)
def test_run_config_p_grid(p_grid, expected) -> None:
    """
    Check parsing of the power-sum exponent grid.
    """

    config = RunConfig(command="verify-bounds", graph6="Bg", p_grid=p_grid)
    assert config.p_grid == pytest.approx(expected)


@pytest.mark.parametrize("p_grid", ["0", "1,-1", "a"])
def test_run_config_p_grid_invalid(p_grid) -> None:
    """
    Check that non-positive or unparseable exponents are rejected.
    """

    with pytest.raises((ValidationError, ValueError)):
        RunConfig(command="verify-bounds", graph6="Bg", p_grid=p_grid)


@pytest.mark.parametrize(
    "sources",
    [
        {},
        {"graph6": "Bg", "exhaustive_n": 4},
        {"graph6": "Bg", "family": {"kind": "star", "n": 4}},
    ],
)
def test_run_config_single_source(sources) -> None:
    """
    Check that exactly one input source must be given.
    """

    with pytest.raises(ValidationError):
        RunConfig(command="compute", **sources)


def test_run_config_settings() -> None:
    """
    Check that the run configuration overrides carry into the settings.
    """

    config = RunConfig(command="compute", graph6="Bg", workers=2, tolerance=1e-5)
    settings = config.settings()
    assert settings.workers == 2
    assert settings.tolerance == 1e-5


def test_load_config_file(tmp_path) -> None:
    """
    Check loading JSON5 defaults, normalising dashes in keys.
    """

    path = tmp_path / "bhix.json5"
    path.write_text(
        "// defaults\n{format: 'csv', 'p-grid': '1/3,1', workers: 2,}\n",
        encoding="utf-8",
    )
    assert load_config_file(path) == {"format": "csv", "p_grid": "1/3,1", "workers": 2}


def test_load_config_file_not_object(tmp_path) -> None:
    """
    Check that a configuration file must hold an object.
    """

    path = tmp_path / "bhix.json5"
    path.write_text("[1, 2]\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_config_file(path)


@pytest.mark.parametrize("value", ["abc", "-1", "0"])
def test_settings_env_invalid(monkeypatch, value) -> None:
    """
    Check that an invalid tolerance environment variable is rejected by `from_env`.
    """

    monkeypatch.setenv(TOLERANCE_ENV_VAR, value)
    with pytest.raises(ValidationError):
        BhixSettings.from_env()


def test_default_settings_env_invalid(monkeypatch, caplog) -> None:
    """
    Check that the module default settings fall back to the built-in tolerance,
    with a warning, when the environment variable is invalid.
    """

    monkeypatch.setenv(TOLERANCE_ENV_VAR, "abc")
    with caplog.at_level(logging.WARNING, logger="bhix.settings"):
        settings = _default_settings()
    assert settings.tolerance == 1e-8
    assert TOLERANCE_ENV_VAR in caplog.text
