"""Общие опции команд и сборка RunConfig."""

from pathlib import Path
from typing import Callable

import click
import structlog
from app.schemas.enums import OutputFormat
from app.schemas.run_config import RunConfig


def run_options(fn: Callable) -> Callable:
    """Опции --p, --m, --d, --max-sw, --seed, --strict, --format, --cache-dir."""
    decorators = [
        click.option("--p", "p", default=None, help="Prime or comma-separated primes, e.g. 2,3"),
        click.option("--m", "m", type=int, default=None, help="Witt length minus one"),
        click.option("--d", "d", default=None, help="Arity or comma-separated arities, e.g. 2,3"),
        click.option("--max-sw", "max_sw", type=int, default=None, help="Largest conductor"),
        click.option("--seed", "seed", type=int, default=None, help="Seed of sampled suites"),
        click.option("--strict", is_flag=True, default=False, help="Uncertified cases fail"),
        click.option(
            "--format",
            "format",
            type=click.Choice([f.value for f in OutputFormat]),
            default=None,
            help="Output format",
        ),
        click.option(
            "--cache-dir",
            "cache_dir",
            type=click.Path(file_okay=False, path_type=Path),
            envvar="WITTLAB_CACHE_DIR",
            default=None,
            help="Universal polynomial cache directory",
        ),
    ]
    for decorator in reversed(decorators):
        fn = decorator(fn)
    return fn


def build_config(options: dict) -> RunConfig:
    """RunConfig из значений опций; seed попадает в контекст логов."""
    config = RunConfig.build(
        p_list=options.pop("p", None),
        m=options.pop("m", None),
        d_list=options.pop("d", None),
        max_sw=options.pop("max_sw", None),
        seed=options.pop("seed", None),
        strict=options.pop("strict", None),
        format=options.pop("format", None),
        cache_dir=options.pop("cache_dir", None),
    )
    structlog.contextvars.bind_contextvars(seed=config.seed)
    return config
