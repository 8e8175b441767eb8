"""Команды cache build | inspect | clear."""

import click
from app.core.witt import build_cache, clear_cache, inspect_cache
from app.core.witt.cache import cache_path
from app.schemas.enums import OutputFormat

from .base import cli, handle_errors
from .options import build_config, run_options
from .output import emit


@cli.group("cache")
def cache_group() -> None:
    """Manage the universal Witt polynomial cache."""


@cache_group.command("build")
@run_options
@handle_errors
def cache_build(**options) -> None:
    """Build, check and write the cache for every requested p."""
    config = build_config(options)
    for p in config.p_list:
        path = build_cache(p, config.m, config.cache_dir)
        click.echo(f"written {path}")


@cache_group.command("inspect")
@run_options
@handle_errors
def cache_inspect(**options) -> None:
    """Show the sizes and the text of the cached polynomials."""
    config = build_config(options)
    for p in config.p_list:
        if not cache_path(p, config.m, config.cache_dir).exists():
            build_cache(p, config.m, config.cache_dir)
        summary = inspect_cache(p, config.m, config.cache_dir)
        if config.format == OutputFormat.JSON:
            emit(summary, config.format)
            continue
        click.echo(f"# {summary['path']}")
        for row in summary["polys"]:
            click.echo(
                f"{row['kind']}_{row['n']} = {row['poly']}"
                f"  [terms={row['terms']} degree={row['degree']}]"
            )


@cache_group.command("clear")
@run_options
@handle_errors
def cache_clear(**options) -> None:
    """Remove all cache files from the cache directory."""
    config = build_config(options)
    removed = clear_cache(config.cache_dir)
    click.echo(f"removed {removed} file(s) from {config.cache_dir}")
