# Команды CLI: вычисления, проверки, кэш
from . import cache, compute, verify  # noqa: F401 - регистрация команд
from .base import cli

__all__ = ["cli"]
