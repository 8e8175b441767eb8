"""
Симметрические функции: SFraction и переписывание через S_1..S_d.

SFraction хранит элемент K' = Frac(U^{(d)}) в карте, где S_d — униформизатор
исключительного дивизора: числитель — многочлен от S_1..S_d, знаменатель —
степень S_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from app.core.exceptions import DomainError, SymmetryError
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from .field import FieldElem
from .multi import MultiLaurentPoly, variable_names
from .valuation import INFINITY, Valuation


def s_names(d: int) -> tuple[str, ...]:
    return variable_names("S", d)


def t_names(d: int) -> tuple[str, ...]:
    return variable_names("t", d)


@lru_cache(maxsize=None)
def _zz_ring(variables: tuple[str, ...]):
    R, *_ = ring(",".join(variables), ZZ)
    return R


@lru_cache(maxsize=None)
def elementary(p: int, d: int, k: int, prefix: str = "t") -> MultiLaurentPoly:
    """e_k(t_1..t_d); e_0 = 1, e_k = 0 при k > d."""
    variables = variable_names(prefix, d)
    if k < 0 or k > d:
        return MultiLaurentPoly.zero(p, variables)
    terms = {}
    for idx in combinations(range(d), k):
        exps = [0] * d
        for i in idx:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return MultiLaurentPoly(p, variables, terms)


@dataclass(frozen=True)
class SFraction:
    """
    N(S_1..S_d) / S_d^M в канонической форме.

    Attributes:
        numerator: многочлен от S_1..S_d с неотрицательными показателями
        den_pow: M >= 0; либо M = 0, либо S_d не делит числитель; ноль — (0, 0)
    """

    numerator: MultiLaurentPoly
    den_pow: int = 0

    # ==================== Конструкторы ====================

    @classmethod
    def zero(cls, p: int, d: int) -> "SFraction":
        return cls(MultiLaurentPoly.zero(p, s_names(d)), 0)

    @classmethod
    def constant(cls, p: int, d: int, c: int) -> "SFraction":
        return sfrac_normalize(MultiLaurentPoly.constant(p, s_names(d), c), 0)

    @classmethod
    def gen(cls, p: int, d: int, k: int) -> "SFraction":
        """S_k, 1 <= k <= d; S_0 = 1."""
        if k == 0:
            return cls.constant(p, d, 1)
        return sfrac_normalize(MultiLaurentPoly.gen(p, s_names(d), k - 1), 0)

    @property
    def p(self) -> int:
        return self.numerator.p

    @property
    def d(self) -> int:
        return self.numerator.nvars

    @property
    def characteristic(self) -> int:
        return self.p

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ==================== Арифметика ====================

    def _coerce(self, other) -> Optional["SFraction"]:
        if isinstance(other, SFraction):
            if other.p != self.p or other.d != self.d:
                raise DomainError("Cannot combine symmetric fractions of different charts")
            return other
        if isinstance(other, (int, FieldElem)):
            return SFraction.constant(self.p, self.d, int(other))
        return None

    def _sd_power(self, k: int) -> MultiLaurentPoly:
        exps = [0] * self.d
        exps[-1] = k
        return MultiLaurentPoly.monomial(self.p, s_names(self.d), exps)

    def __add__(self, other) -> "SFraction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        M = max(self.den_pow, o.den_pow)
        num = self.numerator * self._sd_power(M - self.den_pow) + o.numerator * self._sd_power(
            M - o.den_pow
        )
        return sfrac_normalize(num, M)

    __radd__ = __add__

    def __neg__(self) -> "SFraction":
        return SFraction(-self.numerator, self.den_pow)

    def __sub__(self, other) -> "SFraction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "SFraction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "SFraction":
        if isinstance(other, (int, FieldElem)):
            return sfrac_normalize(self.numerator * int(other), self.den_pow)
        if isinstance(other, MultiLaurentPoly):
            return sfrac_normalize(self.numerator * other, self.den_pow)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return sfrac_normalize(self.numerator * o.numerator, self.den_pow + o.den_pow)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SFraction":
        if n < 0:
            raise DomainError("Negative powers of symmetric fractions are not supported")
        return sfrac_normalize(self.numerator**n, self.den_pow * n)

    def frobenius(self) -> "SFraction":
        return SFraction(self.numerator.frobenius(), self.den_pow * self.p)

    def div_sd(self, k: int = 1) -> "SFraction":
        """Деление на S_d^k."""
        if self.is_zero():
            return self
        return sfrac_normalize(self.numerator, self.den_pow + k)

    # ==================== Нормирование и печать ====================

    def v_exceptional(self) -> Valuation:
        return v_exceptional(self)

    def expand(self, prefix: str = "t") -> MultiLaurentPoly:
        """Подставить S_k = e_k(t) и разделить на e_d^M (моном t_1..t_d)."""
        p, d = self.p, self.d
        values = [elementary(p, d, k, prefix) for k in range(1, d + 1)]
        expanded = self.numerator.substitute(values)
        return expanded.shift((-self.den_pow,) * d)

    def to_dict(self) -> dict:
        return {"numerator": self.numerator.to_pairs(), "den_pow": self.den_pow}

    def __str__(self) -> str:
        num = str(self.numerator)
        if self.den_pow == 0:
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        den = f"S{self.d}" if self.den_pow == 1 else f"S{self.d}^{self.den_pow}"
        return f"{num}/{den}"


def sfrac_normalize(num: MultiLaurentPoly, M: int) -> SFraction:
    """
    Сократить общий множитель S_d числителя и знаменателя S_d^M.

    Raises:
        DomainError: M < 0 или числитель с отрицательными показателями
    """
    if M < 0:
        raise DomainError(f"Denominator exponent must be nonnegative, got {M}", details={"M": M})
    if num.has_negative_exponents():
        raise DomainError("Numerator of a symmetric fraction must be a polynomial")
    if num.is_zero():
        return SFraction(num, 0)
    k = min(exps[-1] for exps, _ in num.items())
    cancel = min(k, M)
    if cancel:
        shift = [0] * num.nvars
        shift[-1] = -cancel
        num = num.shift(shift)
    return SFraction(num, M - cancel)


def v_exceptional(f: SFraction) -> Valuation:
    """v_{R'}: порядок числителя в начале координат S минус M; +∞ для нуля."""
    if f.is_zero():
        return INFINITY
    return f.numerator.mindeg_total() - f.den_pow


def sym_to_elementary(f: MultiLaurentPoly) -> SFraction:
    """
    Переписать симметрический многочлен Лорана от t_1..t_d через S_1..S_d.

    Отрицательные показатели снимаются умножением на (t_1..t_d)^N = S_d^N,
    после чего многочлен переписывается основной теоремой о симметрических
    многочленах (sympy symmetrize над Z), и результат приводится по модулю p.

    Raises:
        SymmetryError: если f не инвариантен относительно транспозиций
    """
    if not f.is_symmetric():
        raise SymmetryError("Polynomial is not symmetric", details={"poly": str(f)})
    p, d = f.p, f.nvars
    names = s_names(d)
    if f.is_zero():
        return SFraction.zero(p, d)
    N = max(0, -min(f.min_exponents()))
    shifted = f.shift((N,) * d)
    R = _zz_ring(f.variables)
    lifted = R.from_dict(dict(shifted.items()))
    sym, rem, _ = lifted.symmetrize()
    if rem:
        raise SymmetryError("Symmetric rewriting left a remainder", details={"poly": str(f)})
    num = MultiLaurentPoly(p, names, {tuple(e): int(c) for e, c in sym.items()})
    return sfrac_normalize(num, N)
