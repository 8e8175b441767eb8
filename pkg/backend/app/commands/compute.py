"""Команды вычислений: swan, rsw, lambda, sympow-swan, blprod-swan, omega-basis, min-degree."""

import click
from app.core.exceptions import EXIT_VERIFICATION_FAILED, raise_invalid_input
from app.schemas.enums import OutputFormat
from app.schemas.run_config import RunConfig
from app.services import compute_service
from app.services.compute_service import ComputeResult

from .base import cli, handle_errors
from .options import build_config, run_options
from .output import emit

ALPHA_HELP = 'Witt vector: one [[exponent, coeff], ...] list per component, e.g. "[[[-3,1]]]"'


def _single(config: RunConfig) -> RunConfig:
    """Не более одного p и одного d; без флага берётся первое значение по умолчанию."""
    passed = config.model_fields_set
    if "p_list" in passed and len(config.p_list) > 1:
        raise_invalid_input("compute commands take a single prime", field="p")
    if "d_list" in passed and len(config.d_list) > 1:
        raise_invalid_input("compute commands take a single d", field="d")
    return config


def _finish(result: ComputeResult, config: RunConfig) -> None:
    emit(result.payload, config.format)
    if config.strict and not result.certified:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)


@cli.command("swan")
@click.option("--alpha", required=True, help=ALPHA_HELP)
@run_options
@handle_errors
def swan_cmd(alpha: str, **options) -> None:
    """Certified Swan conductor of the character of ALPHA."""
    config = _single(build_config(options))
    _finish(compute_service.compute_swan(config, alpha), config)


@cli.command("rsw")
@click.option("--alpha", required=True, help=ALPHA_HELP)
@run_options
@handle_errors
def rsw_cmd(alpha: str, **options) -> None:
    """Conductor level and the F^m d witness of the reduced representative."""
    config = _single(build_config(options))
    _finish(compute_service.compute_rsw(config, alpha), config)


@cli.command("lambda")
@click.option("--alpha", required=True, help=ALPHA_HELP)
@run_options
@handle_errors
def lambda_cmd(alpha: str, **options) -> None:
    """Push ALPHA to the symmetric power: components in S_1..S_d."""
    config = _single(build_config(options))
    _finish(compute_service.compute_lambda(config, alpha), config)


@cli.command("sympow-swan")
@click.option("--alpha", required=True, help=ALPHA_HELP)
@run_options
@handle_errors
def sympow_swan_cmd(alpha: str, **options) -> None:
    """Conductor upstairs and on the exceptional divisor of the symmetric power."""
    config = _single(build_config(options))
    _finish(compute_service.compute_sympow_swan(config, alpha), config)


@cli.command("blprod-swan")
@click.option("--alpha", required=True, help="First character, in the variable x")
@click.option("--beta", required=True, help="Second character, in the variable y")
@run_options
@handle_errors
def blprod_swan_cmd(alpha: str, beta: str, **options) -> None:
    """Conductor of the external sum on the blow-up of the product."""
    config = _single(build_config(options))
    _finish(compute_service.compute_blprod_swan(config, alpha, beta), config)


def _parse_indices(value: str) -> list[int]:
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise_invalid_input(f"expected comma-separated integers, got {value!r}", field="i")


@cli.command("omega-basis")
@click.option("--i", "indices", default=None, help="Indices, e.g. -1,1,2 (default 1..d)")
@run_options
@handle_errors
def omega_basis_cmd(indices: str, **options) -> None:
    """The forms omega_i in the basis dS_k/S_d."""
    config = _single(build_config(options))
    values = _parse_indices(indices) if indices else list(range(1, config.d + 1))
    _finish(compute_service.compute_omega_basis(config, values), config)


@cli.command("min-degree")
@click.option("--genus", type=click.IntRange(min=0), required=True)
@click.option("--deg-mod", "deg_mod", type=click.IntRange(min=0), required=True)
@click.option(
    "--format", "format", type=click.Choice([f.value for f in OutputFormat]), default="json"
)
@handle_errors
def min_degree_cmd(genus: int, deg_mod: int, format: str) -> None:
    """Smallest admissible d: max(2g - 1 + deg m, deg m)."""
    emit(compute_service.compute_min_degree(genus, deg_mod).payload, OutputFormat(format))
