"""Вывод результатов команд: JSON одной строкой или таблица ключ/значение."""

import json
from typing import Any

import click
from app.schemas.enums import OutputFormat


def _compact(value: Any) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False)


def emit(payload: Any, fmt: OutputFormat) -> None:
    if fmt == OutputFormat.JSON or not isinstance(payload, dict):
        click.echo(_compact(payload))
        return
    width = max(len(k) for k in payload) if payload else 0
    for key, value in payload.items():
        text = value if isinstance(value, str) else _compact(value)
        click.echo(f"{key.ljust(width)}  {text}")
