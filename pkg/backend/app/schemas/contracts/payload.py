"""
Payload Parser — разбор полиномиальных аргументов CLI.

Формат многочлена: список пар [показатель, коэффициент], например
[[-3,1],[2,4]] для t^{-3} + 4t^2. Многомерные члены несут вектор показателей:
[[[1,1],2]] для 2·t_1t_2. Вектор Витта — список таких списков, по одному на
компоненту: "[[[-3,1]]]" для (t^{-3}) при m = 0.

Ошибки разбора несут позицию в строке (ошибка JSON) или путь к элементу
(ошибка структуры).
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from app.core.algebra import LaurentPoly, MultiLaurentPoly
from app.core.exceptions import PayloadParseError
from app.core.witt.universal import WittContext
from app.core.witt.vector import WittVector
from pydantic import StrictInt, TypeAdapter, ValidationError

# ==================== Схемы ====================

Pair = tuple[StrictInt, StrictInt]
MultiPair = tuple[list[StrictInt], StrictInt]

_POLY = TypeAdapter(list[Pair])
_VECTOR = TypeAdapter(list[list[Pair]])
_MULTI = TypeAdapter(list[MultiPair])


def _path(loc: Sequence[Any]) -> str:
    """('0', 1, 0) → "[0][1][0]"."""
    return "".join(f"[{x}]" for x in loc)


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PayloadParseError(f"Malformed payload: {exc.msg}", position=exc.pos) from exc


def _validate(adapter: TypeAdapter, raw: Any, what: str) -> Any:
    try:
        return adapter.validate_python(raw)
    except ValidationError as exc:
        err = exc.errors()[0]
        raise PayloadParseError(f"Malformed {what}: {err['msg']}", path=_path(err["loc"])) from exc


# ==================== Разбор ====================


def parse_poly(text: str, p: int, variable: str = "t") -> LaurentPoly:
    """Разобрать многочлен Лорана от одной переменной."""
    pairs = _validate(_POLY, _load(text), "polynomial")
    return LaurentPoly.from_pairs(p, pairs, variable)


def parse_multi_poly(text: str, p: int, variables: Sequence[str]) -> MultiLaurentPoly:
    """Разобрать многочлен от нескольких переменных; длина вектора показателей проверяется."""
    pairs = _validate(_MULTI, _load(text), "polynomial")
    for i, (exps, _) in enumerate(pairs):
        if len(exps) != len(variables):
            raise PayloadParseError(
                f"Expected {len(variables)} exponents, got {len(exps)}", path=f"[{i}][0]"
            )
    return MultiLaurentPoly.from_pairs(p, variables, pairs)


def parse_witt(text: str, ctx: WittContext) -> WittVector:
    """
    Разобрать вектор Витта длины m+1 над F_p[t, 1/t].

    Raises:
        PayloadParseError: неверный JSON, структура или число компонент
    """
    components = _validate(_VECTOR, _load(text), "Witt vector")
    if len(components) != ctx.length:
        raise PayloadParseError(
            f"Expected {ctx.length} components for m={ctx.m}, got {len(components)}", path="[]"
        )
    return WittVector(ctx, (LaurentPoly.from_pairs(ctx.p, pairs) for pairs in components))


__all__ = [
    "parse_poly",
    "parse_multi_poly",
    "parse_witt",
]
