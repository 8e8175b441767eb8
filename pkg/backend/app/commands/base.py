"""
Группа команд wittlab и обработка ошибок.

Коды выхода: 0 — успех, 1 — ошибка ввода, 2 — провал проверки или
неподтверждённый результат в строгом режиме.
"""

import functools
from typing import Callable

import click
import structlog
from app.core.exceptions import (
    EXIT_INPUT_ERROR,
    InternalConsistencyError,
    WittLabException,
    exit_code_for,
)
from app.core.logging import configure_logging, get_logger

logger = get_logger(__name__)


class WittLabGroup(click.Group):
    """Ошибки разбора командной строки завершаются кодом 1, а не 2."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_INPUT_ERROR
            raise


def handle_errors(fn: Callable) -> Callable:
    """Перевести WittLabException в сообщение на stderr и код выхода."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except WittLabException as exc:
            if isinstance(exc, InternalConsistencyError):
                logger.exception("self_check_failed", error=exc.message, details=exc.details)
            else:
                logger.info("command_rejected", error=exc.message)
            click.echo(f"Error: {exc.message}", err=True)
            click.get_current_context().exit(exit_code_for(exc))

    return wrapper


@click.group(cls=WittLabGroup)
@click.version_option("0.1.0", prog_name="wittlab")
@click.pass_context
def cli(ctx: click.Context) -> None:
    """WittLab: Swan conductors of Artin-Schreier-Witt characters."""
    configure_logging()
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(command=ctx.invoked_subcommand)
