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
bhix command line interface.
"""

from __future__ import annotations

import functools
import logging

from logging import getLogger
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict, NoReturn, Optional, Tuple

import click

from pydantic import ValidationError

from . import __version__
from .bounds import check_all, sweep_bounds
from .exceptions import (
    BhixError,
    Disconnected,
    DisconnectedResult,
    GraphTooLarge,
    TooLarge,
)
from .extremal import (
    conjecture_scan,
    diameter2_scan,
    theorem_5_2_scan,
    verify_family_factorizations,
)
from .families import FamilyKind, FamilySpec, generate
from .formats import parse_graph6, read_graph_file
from .graph import structure_report
from .indices import IndexName, index_report
from .operations import OpKind, product_report
from .reports import OutputKind, render, validate_output
from .settings import TOLERANCE_ENV_VAR, BhixSettings, RunConfig, load_config_file

if TYPE_CHECKING:
    from .graph import Graph
    from .reports import Result
    from .types import OutputFormat

logger = getLogger(__name__)

EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_VIOLATION = 4
EXIT_TOO_LARGE = 5

LOG_FORMAT = "%(asctime)s %(name)s [%(levelname)s] %(message)s"
LOG_HANDLER_NAME = "bhix-cli"
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _configure_logging(level: str) -> None:
    package_logger = logging.getLogger("bhix")
    for handler in list(package_logger.handlers):
        if handler.get_name() == LOG_HANDLER_NAME:
            package_logger.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.set_name(LOG_HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    package_logger.addHandler(handler)
    package_logger.setLevel(level)


def _fail(err: Exception, exit_code: int) -> NoReturn:
    logger.debug("Exiting with code %i", exit_code, exc_info=err)
    click.echo(f"bhix: error: {err}", err=True)
    raise click.exceptions.Exit(exit_code)


def handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """
    Map bhix exceptions raised by a command to its exit codes.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (Disconnected, DisconnectedResult) as err:
            _fail(err, EXIT_DISCONNECTED)
        except (TooLarge, GraphTooLarge) as err:
            _fail(err, EXIT_TOO_LARGE)
        except (BhixError, ValidationError) as err:
            _fail(err, EXIT_USAGE)

    return wrapper


def _emit(result: Result, output_format: OutputFormat) -> None:
    click.echo(render(result, output_format), nl=False)


def _exit_on_violation(violated: bool, what: str) -> None:
    if violated:
        click.echo(f"bhix: {what}", err=True)
        raise click.exceptions.Exit(EXIT_VIOLATION)


def _defaults_for(command: click.Command, defaults: Dict[str, Any]) -> Dict[str, Any]:
    if isinstance(command, click.Group):
        return {name: _defaults_for(sub, defaults) for name, sub in command.commands.items()}
    return dict(defaults)


def output_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option(
        "--tolerance",
        type=click.FloatRange(min=0, min_open=True),
        default=None,
        help="Relative comparison tolerance (overrides BHIX_TOLERANCE).",
    )(func)
    func = click.option(
        "-f",
        "--format",
        "output_format",
        type=click.Choice(["json", "csv", "text"]),
        default="json",
        show_default=True,
        help="Output format.",
    )(func)
    return func


def workers_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "-w",
        "--workers",
        type=click.IntRange(min=1),
        default=None,
        help="Worker processes. Defaults to the number of available cores.",
    )(func)


def graph_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """
    Options selecting the input graph: a graph6 string, a graph file or a family member.
    """

    for name, help_text in reversed(
        [
            ("--a", "Pendants on the first centre of a double star."),
            ("--b", "Pendants on the second centre of a double star."),
            ("--s", "Triangles of a firefly."),
            ("--t", "Pendant paths of a firefly."),
            ("--q", "Pendant edges of a firefly."),
        ],
    ):
        func = click.option(name, type=click.IntRange(min=0), default=None, help=help_text)(func)
    func = click.option(
        "--n",
        "n",
        type=click.IntRange(min=1),
        default=None,
        help="Vertex count of the family member (or of the exhaustive sweep).",
    )(func)
    func = click.option(
        "--family",
        type=click.Choice([kind.value for kind in FamilyKind]),
        default=None,
        help="Generate the input graph from a family.",
    )(func)
    func = click.option(
        "--edges",
        "graph_file",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        default=None,
        help="Read the input graph from a file (graph6 if named *.g6, otherwise an edge list).",
    )(func)
    func = click.option("--graph6", default=None, help="Input graph as a graph6 string.")(func)
    return func


def _family_params(family: Optional[str], **params: Optional[int]) -> Optional[Dict[str, Any]]:
    if family is None:
        return None
    return {
        "kind": FamilyKind.from_name_str(family),
        **{key: value for key, value in params.items() if value is not None},
    }


def _run_config(command: str, exhaustive: bool = False, **options: Any) -> RunConfig:
    family = _family_params(
        options.pop("family"),
        n=options["n"],
        a=options.pop("a"),
        b=options.pop("b"),
        s=options.pop("s"),
        t=options.pop("t"),
        q=options.pop("q"),
    )
    n = options.pop("n")
    values = {
        "command": command,
        "graph6": options.pop("graph6"),
        "graph_file": options.pop("graph_file"),
        "family": family,
        "exhaustive_n": n if exhaustive else None,
        "output_format": options.pop("output_format"),
        "tolerance": options.pop("tolerance"),
        **{key: value for key, value in options.items() if value is not None},
    }
    config = RunConfig(**values)
    logger.debug("Run configuration: %r", config)
    return config


def load_graph(config: RunConfig) -> Graph:
    """
    Load the input graph named by a run configuration.
    """

    if config.graph6 is not None:
        return parse_graph6(config.graph6)
    if config.graph_file is not None:
        return read_graph_file(config.graph_file)
    assert config.family is not None
    return generate(FamilySpec.create(**config.family))


def _operand(source: str) -> Graph:
    path = Path(source)
    if path.is_file():
        return read_graph_file(path)
    return parse_graph6(source)


@click.group(help="Biharmonic index of graphs: indices, bounds, extremal scans and products.")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
    help="Logging level of diagnostics written to standard error.",
)
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="JSON5 file of option defaults (e.g. workers, format, tolerance).",
)
@click.version_option(version=__version__, prog_name="bhix")
@click.pass_context
def bhix(ctx: click.Context, log_level: str, config_file: Optional[Path]) -> None:
    """
    Biharmonic index of graphs: indices, bounds, extremal scans and products.
    """

    _configure_logging(log_level.upper())
    try:
        BhixSettings.from_env()
    except ValidationError as err:
        click.echo(f"bhix: error: invalid {TOLERANCE_ENV_VAR}: {err.errors()[0]['msg']}", err=True)
        ctx.exit(EXIT_USAGE)
    if config_file is not None:
        try:
            defaults = load_config_file(config_file)
        except ValueError as err:
            click.echo(f"bhix: error: {err}", err=True)
            ctx.exit(EXIT_USAGE)
        if "format" in defaults:
            defaults.setdefault("output_format", defaults.pop("format"))
        ctx.default_map = _defaults_for(bhix, defaults)


@bhix.command(help="Compute every index of a graph.")
@graph_options
@click.option(
    "--index",
    "indices",
    multiple=True,
    type=click.Choice([name.value for name in IndexName]),
    help="Request an index explicitly (repeatable). Requesting a connectivity-requiring "
    "index of a disconnected graph is an error.",
)
@output_options
@handle_errors
def compute(indices: Tuple[str, ...], **options: Any) -> None:
    config = _run_config("compute", **options)
    g = load_graph(config)
    report = index_report(
        g,
        settings=config.settings(),
        include=[IndexName(name) for name in indices] or None,
    )
    _emit(report, config.output_format)


@bhix.command(help="Summarise the structure of a graph (connectivity, diameter, degrees).")
@graph_options
@output_options
@handle_errors
def structure(**options: Any) -> None:
    config = _run_config("structure", **options)
    _emit(structure_report(load_graph(config)), config.output_format)


@bhix.command("verify-bounds", help="Check the biharmonic index bounds on a graph or sweep.")
@graph_options
@click.option(
    "--exhaustive",
    is_flag=True,
    default=False,
    help="Check every connected labelled graph on --n vertices (n <= 8).",
)
@click.option(
    "--p",
    "p_grid",
    default=None,
    help="Comma-separated exponents of the power-sum bound, e.g. '1/3,2/3,1,2'.",
)
@workers_option
@output_options
@handle_errors
def verify_bounds(exhaustive: bool, **options: Any) -> None:
    config = _run_config("verify-bounds", exhaustive=exhaustive, **options)
    settings = config.settings()
    if config.exhaustive_n is not None:
        sweep = sweep_bounds(
            config.exhaustive_n,
            p_grid=config.p_grid,
            workers=config.workers,
            settings=settings,
        )
        _emit(sweep, config.output_format)
        _exit_on_violation(not sweep.all_hold, f"{sweep.violation_count} bound violations")
        return
    reports = check_all(load_graph(config), p_grid=config.p_grid, settings=settings)
    _emit(reports, config.output_format)
    failed = [report.bound_id.value for report in reports if not report.holds]
    _exit_on_violation(bool(failed), f"bounds violated: {', '.join(failed)}")


@bhix.group(help="Exhaustive scans over trees, diameter-2 graphs and graph families.")
def scan() -> None:
    pass


def _scan_settings(workers: Optional[int], tolerance: Optional[float]) -> BhixSettings:
    return BhixSettings.from_env(workers=workers, tolerance=tolerance)


@scan.command(help="Biharmonic index of every free tree on --n vertices.")
@click.option("--n", "n", type=int, required=True, help="Vertex count (5 <= n <= 18).")
@workers_option
@output_options
@handle_errors
def trees(
    n: int,
    workers: Optional[int],
    output_format: OutputFormat,
    tolerance: Optional[float],
) -> None:
    report = conjecture_scan(n, settings=_scan_settings(workers, tolerance))
    _emit(report, output_format)
    _exit_on_violation(not report.conjecture_verified, f"tree extremes not verified at n={n}")


@scan.command(help="Every labelled graph of diameter 2 on --n vertices against the star.")
@click.option("--n", "n", type=int, required=True, help="Vertex count (3 <= n <= 7).")
@workers_option
@output_options
@handle_errors
def diameter2(
    n: int,
    workers: Optional[int],
    output_format: OutputFormat,
    tolerance: Optional[float],
) -> None:
    report = diameter2_scan(n, settings=_scan_settings(workers, tolerance))
    _emit(report, output_format)
    _exit_on_violation(not report.verified, f"diameter-2 scan not verified at n={n}")


@scan.command(help="Trees of large diameter on --n vertices against the star.")
@click.option("--n", "n", type=int, required=True, help="Vertex count (8 <= n <= 18).")
@workers_option
@output_options
@handle_errors
def t52(
    n: int,
    workers: Optional[int],
    output_format: OutputFormat,
    tolerance: Optional[float],
) -> None:
    report = theorem_5_2_scan(n, settings=_scan_settings(workers, tolerance))
    _emit(report, output_format)
    _exit_on_violation(not report.verified, f"diameter bound violated at n={n}")


@scan.command(help="Closed forms and factorisations of stars, double stars and fireflies.")
@click.option("--n-max", "n_max", type=int, required=True, help="Largest order (3..40).")
@workers_option
@output_options
@handle_errors
def families(
    n_max: int,
    workers: Optional[int],
    output_format: OutputFormat,
    tolerance: Optional[float],
) -> None:
    report = verify_family_factorizations(n_max, settings=_scan_settings(workers, tolerance))
    _emit(report, output_format)
    _exit_on_violation(not report.verified, f"family identities failed up to n={n_max}")


@bhix.command(help="Apply a graph operation and compare its biharmonic index with the prediction.")
@click.option(
    "--op",
    type=click.Choice(["complement", "join", "cartesian", "lex", "lexicographic"]),
    required=True,
    help="Graph operation.",
)
@click.option("--a", "a", required=True, help="First operand: graph file or graph6 string.")
@click.option("--b", "b", default=None, help="Second operand of binary operations.")
@output_options
@handle_errors
def product(
    op: str,
    a: str,
    b: Optional[str],
    output_format: OutputFormat,
    tolerance: Optional[float],
) -> None:
    kind = OpKind.lexicographic if op == "lex" else OpKind(op)
    report = product_report(
        kind,
        _operand(a),
        _operand(b) if b is not None else None,
        settings=_scan_settings(None, tolerance),
    )
    _emit(report, output_format)
    _exit_on_violation(not report.bh_agrees, "predicted and direct biharmonic indices differ")


@bhix.command(help="Validate saved JSON output of a command against its schema.")
@click.argument("kind", type=click.Choice([kind.value for kind in OutputKind]))
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@handle_errors
def validate(kind: str, file: Path) -> None:
    validate_output(kind, file.read_text(encoding="utf-8"))
    click.echo(f"{file}: valid {kind} output")


def main() -> None:
    """
    Console script entry point.
    """

    bhix(prog_name="bhix")
