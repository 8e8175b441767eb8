"""
Точка входа: python -m app.main <command> (из каталога backend/).
"""

import sys
from typing import Optional, Sequence

import click
from app.commands import cli
from app.core.exceptions import EXIT_INPUT_ERROR, EXIT_OK, exit_code_for
from app.core.logging import configure_logging, get_logger

logger = get_logger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Выполнить команду и вернуть код выхода (0, 1 или 2)."""
    configure_logging()
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_INPUT_ERROR
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT_ERROR
    except Exception as exc:
        logger.exception("unhandled_error")
        return exit_code_for(exc)
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
