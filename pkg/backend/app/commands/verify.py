"""Команда verify: наборы проверок с отчётом."""

import click
from app.core.exceptions import EXIT_VERIFICATION_FAILED
from app.schemas.enums import Suite
from app.services.verify_service import verify

from .base import cli, handle_errors
from .options import build_config, run_options


@cli.command("verify")
@click.argument("suite", type=click.Choice([s.value for s in Suite]))
@run_options
@handle_errors
def verify_cmd(suite: str, **options) -> None:
    """Run a verification SUITE and print its report."""
    config = build_config(options)
    report = verify(Suite(suite), config)
    click.echo(report.render(config.format))
    if not report.passed:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)
