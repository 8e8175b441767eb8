"""Единая точка входа для кольцевых операций над многочленами."""

from __future__ import annotations

from enum import Enum
from typing import Any, Sequence, Union

from app.core.exceptions import DomainError

from .laurent import LaurentPoly
from .multi import MultiLaurentPoly

Poly = Union[LaurentPoly, MultiLaurentPoly]


class RingOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIVEXACT = "divexact"


def ring_ops(a: Poly, b: Poly, op: Union[RingOp, str]) -> Poly:
    """
    Применить op к a и b в каноническом разреженном виде.

    Raises:
        DomainError: разные кольца или неизвестная операция
        InexactDivisionError: divexact с ненулевым остатком
    """
    if type(a) is not type(b):
        raise DomainError("Operands live in different polynomial rings")
    try:
        op = RingOp(op)
    except ValueError as exc:
        raise DomainError(f"Unknown ring operation: {op}") from exc

    if op is RingOp.ADD:
        return a + b
    if op is RingOp.SUB:
        return a - b
    if op is RingOp.MUL:
        return a * b
    return a.divexact(b)


def determinant(rows: Sequence[Sequence[Any]]) -> Any:
    """Определитель квадратной матрицы над коммутативным кольцом (разложение Лапласа)."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DomainError("Determinant needs a nonempty square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = rows[0][0] * 0
    for col in range(n):
        entry = rows[0][col]
        if not entry:
            continue
        minor = [r[:col] + r[col + 1 :] for r in (list(row) for row in rows[1:])]
        term = entry * determinant(minor)
        acc = acc + term if col % 2 == 0 else acc - term
    return acc
