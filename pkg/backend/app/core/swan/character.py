"""
ASWCharacter — характеры Артина–Шрайера–Витта локального поля K = F_p((t)).

Характер — класс δ(α) вектора α ∈ W_{m+1}(K) по модулю (F−1)W_{m+1}(K).
Представитель хранится как есть; сравнение классов сводится к приведению
разности.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from app.core.algebra import LaurentPoly
from app.core.exceptions import DomainError
from app.core.witt.vector import (
    WittVector,
    frobenius_witt,
    verschiebung,
    verschiebung_shift,
    witt_add,
    witt_sub,
    witt_sum,
)


@dataclass(frozen=True)
class ReductionStep:
    """Один шаг приведения: вычтено (F−1)(V_slot b)."""

    slot: int
    b: LaurentPoly

    def term(self, alpha: WittVector) -> WittVector:
        v = verschiebung_shift(self.b, self.slot, alpha.ctx)
        return witt_sub(frobenius_witt(v), v)

    def to_dict(self) -> dict:
        return {"slot": self.slot, "b": self.b.to_pairs()}


class Reduction(NamedTuple):
    reduced: WittVector
    history: tuple[ReductionStep, ...]


@dataclass(frozen=True, eq=False)
class ASWCharacter:
    """Характер δ(alpha); alpha может быть не приведён."""

    alpha: WittVector

    @property
    def ctx(self):
        return self.alpha.ctx

    @property
    def p(self) -> int:
        return self.alpha.ctx.p

    @property
    def m(self) -> int:
        return self.alpha.ctx.m

    def __add__(self, other: "ASWCharacter") -> "ASWCharacter":
        return ASWCharacter(witt_add(self.alpha, other.alpha))

    def __sub__(self, other: "ASWCharacter") -> "ASWCharacter":
        return ASWCharacter(witt_sub(self.alpha, other.alpha))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ASWCharacter):
            return NotImplemented
        return same_class(self, other)

    __hash__ = None  # type: ignore[assignment]


def char_from_witt(alpha: WittVector) -> ASWCharacter:
    """
    Характер δ(alpha).

    Raises:
        DomainError: компоненты не многочлены Лорана над F_p
    """
    for a in alpha.components:
        if not isinstance(a, LaurentPoly) or a.p != alpha.ctx.p:
            raise DomainError(
                f"Character representatives need Laurent polynomials over F_{alpha.ctx.p}"
            )
    return ASWCharacter(alpha)


def _pdivisible_pole(a: LaurentPoly, p: int) -> tuple[int, int] | None:
    """Самый отрицательный показатель, делящийся на p, и его коэффициент."""
    for e, c in a.items():
        if e >= 0:
            return None
        if e % p == 0:
            return e, c
    return None


def reduce_representative(alpha: WittVector) -> Reduction:
    """
    Привести представителя по модулю (F−1).

    Слоты обрабатываются по возрастанию; в слоте i самый отрицательный член
    c·t^{-pk} снимается вычитанием (F−1)(V_i(c·t^{-k})). Младшие слоты при
    этом не меняются. После приведения каждая компонента либо регулярна,
    либо имеет порядок, взаимно простой с p.
    """
    ctx = alpha.ctx
    p = ctx.p
    current = alpha
    history: list[ReductionStep] = []
    for slot in range(ctx.length):
        while True:
            pole = _pdivisible_pole(current.components[slot], p)
            if pole is None:
                break
            e, c = pole
            step = ReductionStep(slot, LaurentPoly.monomial(p, e // p, c))
            current = witt_sub(current, step.term(current))
            history.append(step)
    return Reduction(current, tuple(history))


def replay(reduced: WittVector, history: tuple[ReductionStep, ...]) -> WittVector:
    """reduced ⊞ Σ (F−1)(V_i b): восстанавливает исходный представитель."""
    return witt_sum([reduced, *(step.term(reduced) for step in history)])


def _constant_vector_is_zero(v: WittVector) -> bool:
    return all(a.constant_term() == 0 for a in v.components)


def is_unramified(chi: ASWCharacter) -> bool:
    """χ ∈ fil_0: у приведённого представителя все компоненты регулярны."""
    reduced, _ = reduce_representative(chi.alpha)
    return all(a.ord() >= 0 for a in reduced.components)


def _is_trivial_vector(alpha: WittVector) -> bool:
    reduced, _ = reduce_representative(alpha)
    if any(a.ord() < 0 for a in reduced.components):
        return False
    # На константах F−1 нулевое: класс регулярного вектора задаётся вектором
    # свободных членов в W_{m+1}(F_p)
    return _constant_vector_is_zero(reduced)


def is_trivial(chi: ASWCharacter) -> bool:
    return _is_trivial_vector(chi.alpha)


def same_class(chi1: ASWCharacter, chi2: ASWCharacter) -> bool:
    """δ(α) = δ(β) ⇔ класс α ⊟ β тривиален."""
    return _is_trivial_vector(witt_sub(chi1.alpha, chi2.alpha))


def character_order(chi: ASWCharacter) -> int:
    """
    Порядок характера: наименьшее p^k, для которого p^k·χ тривиален.

    В характеристике p умножение на p равно V∘F.
    """
    p = chi.p
    vec = chi.alpha
    for k in range(chi.m + 2):
        if _is_trivial_vector(vec):
            return p**k
        vec = verschiebung(frobenius_witt(vec))
    raise DomainError("Character order exceeds p^(m+1)")
