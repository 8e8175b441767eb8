"""Дискретные нормирования: целое значение или +∞ для нуля."""

from __future__ import annotations

import math
from typing import Iterable, Union

INFINITY = math.inf

# int для ненулевых элементов, INFINITY для нуля
Valuation = Union[int, float]


def min_valuation(values: Iterable[Valuation]) -> Valuation:
    """Минимум нормирований; пустой набор даёт +∞."""
    return min(values, default=INFINITY)


def valuation_to_json(v: Valuation) -> Union[int, str]:
    """JSON не умеет ±∞ — сериализуем их строками."""
    if v == INFINITY:
        return "inf"
    if v == -INFINITY:
        return "-inf"
    return int(v)
