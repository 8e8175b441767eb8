"""
WittVector — векторы Витта длины m+1 над произвольным кольцом коэффициентов.

Кольцо коэффициентов — любое из app.core.algebra (F_p, многочлены Лорана,
симметрические дроби) или целые числа для гост-оракула.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Optional

from app.core.algebra import LaurentPoly, MultiLaurentPoly, SFraction, v_exceptional
from app.core.algebra.valuation import INFINITY, Valuation
from app.core.exceptions import ContextMismatchError, DomainError

from .universal import WittContext, ghost

ValuationFn = Callable[[Any], Valuation]


class WittVector:
    """
    Вектор (a_0, ..., a_m) в W_{m+1}(A).

    Сложение и умножение вычисляются универсальными многочленами контекста.
    """

    __slots__ = ("ctx", "components")

    def __init__(self, ctx: WittContext, components: Iterable[Any]):
        components = tuple(components)
        if len(components) != ctx.length:
            raise DomainError(
                f"Expected {ctx.length} Witt components, got {len(components)}",
                details={"p": ctx.p, "m": ctx.m},
            )
        self.ctx = ctx
        self.components = components

    @classmethod
    def zero_like(cls, ctx: WittContext, sample: Any) -> "WittVector":
        zero = sample * 0
        return cls(ctx, (zero,) * ctx.length)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def m(self) -> int:
        return self.ctx.m

    def is_zero(self) -> bool:
        return not any(self.components)

    def map(self, fn: Callable[[Any], Any]) -> "WittVector":
        """Применить fn к каждой компоненте (например, вложение кольца)."""
        return WittVector(self.ctx, (fn(a) for a in self.components))

    def __add__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, other)

    def __sub__(self, other: "WittVector") -> "WittVector":
        return witt_sub(self, other)

    def __neg__(self) -> "WittVector":
        return witt_neg(self)

    def __mul__(self, other: "WittVector") -> "WittVector":
        return witt_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WittVector):
            return NotImplemented
        return self.ctx.key() == other.ctx.key() and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.ctx.key(), self.components))

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> Any:
        return self.components[i]

    def __repr__(self) -> str:
        inner = ", ".join(str(a) for a in self.components)
        return f"W_{self.ctx.length}[p={self.ctx.p}]({inner})"


def _check_same(a: WittVector, b: WittVector) -> None:
    if a.ctx.key() != b.ctx.key():
        raise ContextMismatchError(
            f"Witt vectors from W_{a.ctx.length}(p={a.ctx.p}) "
            f"and W_{b.ctx.length}(p={b.ctx.p}) cannot be combined"
        )


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    _check_same(a, b)
    values = list(a.components) + list(b.components)
    return WittVector(a.ctx, (f.evaluate(values) for f in a.ctx.sum_polys))


def witt_neg(a: WittVector) -> WittVector:
    zero = a.components[0] * 0
    values = list(a.components) + [zero] * a.ctx.length
    return WittVector(a.ctx, (f.evaluate(values) for f in a.ctx.neg_polys))


def witt_sub(a: WittVector, b: WittVector) -> WittVector:
    return witt_add(a, witt_neg(b))


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    _check_same(a, b)
    values = list(a.components) + list(b.components)
    return WittVector(a.ctx, (f.evaluate(values) for f in a.ctx.prod_polys))


def witt_sum(vectors: Iterable[WittVector]) -> WittVector:
    """Сумма Витта непустого набора векторов."""
    it = iter(vectors)
    try:
        acc = next(it)
    except StopIteration as exc:
        raise DomainError("witt_sum needs at least one vector") from exc
    for v in it:
        acc = witt_add(acc, v)
    return acc


def ghost_components(a: WittVector) -> tuple[int, ...]:
    """Гост-компоненты вектора с целыми компонентами."""
    if not all(isinstance(x, int) for x in a.components):
        raise DomainError("Ghost components are defined here for integer vectors only")
    return ghost(a.ctx.p, a.components)


def _characteristic(x: Any) -> int:
    return getattr(x, "characteristic", 0)


def frobenius_witt(a: WittVector) -> WittVector:
    """F: покомпонентная p-я степень; кольцо должно иметь характеристику p."""
    p = a.ctx.p
    if any(_characteristic(x) != p for x in a.components):
        raise DomainError(f"Frobenius needs coefficients of characteristic {p}")
    return a.map(lambda x: x.frobenius())


def verschiebung_shift(b: Any, slot: int, ctx: WittContext) -> WittVector:
    """Вектор с b в компоненте slot и нулями в остальных."""
    if not 0 <= slot <= ctx.m:
        raise DomainError(
            f"Slot {slot} is out of range 0..{ctx.m}", details={"slot": slot, "m": ctx.m}
        )
    zero = b * 0
    return WittVector(ctx, (b if i == slot else zero for i in range(ctx.length)))


def verschiebung(a: WittVector) -> WittVector:
    """V: (a_0, ..., a_m) ↦ (0, a_0, ..., a_{m-1})."""
    zero = a.components[0] * 0
    return WittVector(a.ctx, (zero,) + a.components[:-1])


def teichmuller(x: Any, ctx: WittContext) -> WittVector:
    return verschiebung_shift(x, 0, ctx)


def default_valuation(x: Any) -> Valuation:
    """Нормирование компоненты по её типу: v_R, v_{R'} или v_{R_3}."""
    if isinstance(x, LaurentPoly):
        return x.ord()
    if isinstance(x, SFraction):
        return v_exceptional(x)
    if isinstance(x, MultiLaurentPoly):
        return x.min_total_degree()
    raise DomainError(f"No valuation known for {type(x).__name__}")


def v_witt(a: WittVector, valuation: Optional[ValuationFn] = None) -> Valuation:
    """min_i p^{m-i}·v(a_i); +∞ для нулевого вектора."""
    valuation = valuation or default_valuation
    p, m = a.ctx.p, a.ctx.m
    result: Valuation = INFINITY
    for i, x in enumerate(a.components):
        if not x:
            continue
        result = min(result, p ** (m - i) * valuation(x))
    return result


def in_fil(a: WittVector, n: int, valuation: Optional[ValuationFn] = None) -> bool:
    """a ∈ fil_n ⇔ v_witt(a) >= −n."""
    return v_witt(a, valuation) >= -n
