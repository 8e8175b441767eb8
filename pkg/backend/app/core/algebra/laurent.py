"""
LaurentPoly — разреженные многочлены Лорана над F_p от одной переменной.

Элементы поля K = Frac(R) представляются конечными суммами c·t^e, e ∈ Z;
t — униформизатор, ord_t — нормированное нормирование v_R.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Optional

from app.core.exceptions import DomainError, InexactDivisionError
from sympy.polys.domains import GF
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from .field import FieldElem, check_prime
from .valuation import INFINITY, Valuation


@lru_cache(maxsize=None)
def _gf_ring(p: int):
    R, _ = ring("t", GF(p))
    return R


class LaurentPoly:
    """
    Многочлен Лорана Σ c_e t^e над F_p.

    Хранит только ненулевые коэффициенты (вычеты в [0, p)).
    Объекты неизменяемы.
    """

    __slots__ = ("p", "variable", "_terms")

    def __init__(self, p: int, terms: Optional[dict[int, int]] = None, variable: str = "t"):
        check_prime(p)
        clean: dict[int, int] = {}
        for e, c in (terms or {}).items():
            c = int(c) % p
            if c:
                clean[int(e)] = c
        self.p = p
        self.variable = variable
        self._terms = clean

    @classmethod
    def _raw(cls, p: int, terms: dict[int, int], variable: str) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj.p = p
        obj.variable = variable
        obj._terms = terms
        return obj

    # ==================== Конструкторы ====================

    @classmethod
    def zero(cls, p: int, variable: str = "t") -> "LaurentPoly":
        return cls(p, {}, variable)

    @classmethod
    def constant(cls, p: int, c: int, variable: str = "t") -> "LaurentPoly":
        return cls(p, {0: c}, variable)

    @classmethod
    def monomial(cls, p: int, exponent: int, coeff: int = 1, variable: str = "t") -> "LaurentPoly":
        return cls(p, {exponent: coeff}, variable)

    @classmethod
    def from_pairs(
        cls, p: int, pairs: Iterable[tuple[int, int]], variable: str = "t"
    ) -> "LaurentPoly":
        """Из списка пар [показатель, коэффициент]; повторы складываются."""
        terms: dict[int, int] = {}
        for e, c in pairs:
            terms[e] = terms.get(e, 0) + c
        return cls(p, terms, variable)

    def _like(self, terms: dict[int, int]) -> "LaurentPoly":
        return LaurentPoly._raw(self.p, terms, self.variable)

    # ==================== Доступ ====================

    @property
    def characteristic(self) -> int:
        return self.p

    def items(self) -> Iterator[tuple[int, int]]:
        """Пары (показатель, коэффициент) по возрастанию показателя."""
        return iter(sorted(self._terms.items()))

    def coeff(self, exponent: int) -> FieldElem:
        return FieldElem(self.p, self._terms.get(exponent, 0))

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def ord(self) -> Valuation:
        """Минимальный показатель с ненулевым коэффициентом; +∞ для нуля."""
        return min(self._terms) if self._terms else INFINITY

    def degree(self) -> Valuation:
        return max(self._terms) if self._terms else -INFINITY

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self.items()]

    # ==================== Арифметика ====================

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.p != self.p or other.variable != self.variable:
                raise DomainError(
                    f"Cannot combine polynomials over F_{self.p}[{self.variable}] "
                    f"and F_{other.p}[{other.variable}]"
                )
            return other
        if isinstance(other, (int, FieldElem)):
            return LaurentPoly(self.p, {0: int(other)}, self.variable)
        return None

    def __add__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        terms = dict(self._terms)
        for e, c in o._terms.items():
            v = (terms.get(e, 0) + c) % p
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        p = self.p
        return self._like({e: p - c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, FieldElem)):
            k = int(other) % self.p
            if not k:
                return self._like({})
            return self._like({e: c * k % self.p for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                terms[e] = (terms.get(e, 0) + c1 * c2) % p
        return self._like({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def frobenius(self) -> "LaurentPoly":
        """x ↦ x^p: на F_p коэффициенты не меняются, показатели умножаются на p."""
        p = self.p
        return self._like({e * p: c for e, c in self._terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise DomainError("Only monomials are invertible in F_p[t, 1/t]")
            ((e, c),) = self._terms.items()
            inv = pow(c, -1, self.p)
            return self._like({e * n: pow(inv, -n, self.p)})
        # Разложение n по основанию p: x^n = Π F^k(x)^{n_k}, где F — Фробениус
        result = self._like({0: 1})
        base = self
        while n:
            n, digit = divmod(n, self.p)
            for _ in range(digit):
                result = result * base
            if n:
                base = base.frobenius()
        return result

    def theta(self) -> "LaurentPoly":
        """t·d/dt: da = θ(a)·dlog t."""
        p = self.p
        return self._like({e: c * e % p for e, c in self._terms.items() if (c * e) % p})

    def derivative(self) -> "LaurentPoly":
        p = self.p
        return self._like({e - 1: c * e % p for e, c in self._terms.items() if (c * e) % p})

    def shift(self, k: int) -> "LaurentPoly":
        """Умножение на t^k."""
        return self._like({e + k: c for e, c in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """
        Точное деление в F_p[t, 1/t].

        Сдвиги t^k снимаются, частное считается в кольце sympy над GF(p).

        Raises:
            DomainError: деление на ноль
            InexactDivisionError: если остаток ненулевой
        """
        o = self._coerce(other)
        if o is None or not o:
            raise DomainError("Division by zero polynomial")
        if not self:
            return self._like({})
        sa, sb = min(self._terms), min(o._terms)
        R = _gf_ring(self.p)
        num = R.from_dict({(e - sa,): c for e, c in self._terms.items()})
        den = R.from_dict({(e - sb,): c for e, c in o._terms.items()})
        try:
            quot = num.exquo(den)
        except ExactQuotientFailed as exc:
            raise InexactDivisionError(
                f"{self} is not divisible by {o}", details={"divisor": o.to_pairs()}
            ) from exc
        return self._like({e + sa - sb: int(c) % self.p for (e,), c in quot.items()})

    # ==================== Сравнение и печать ====================

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return (
                self.p == other.p
                and self.variable == other.variable
                and self._terms == other._terms
            )
        if isinstance(other, (int, FieldElem)):
            c = int(other) % self.p
            return self._terms == ({0: c} if c else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.variable, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(str(c))
                continue
            mono = self.variable if e == 1 else f"{self.variable}^{e}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly(F_{self.p}: {self})"


def ord_t(f: LaurentPoly) -> Valuation:
    """Нормирование v_R: минимальный показатель; +∞ для нуля."""
    return f.ord()
