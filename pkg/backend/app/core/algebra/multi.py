"""
MultiLaurentPoly — разреженные многочлены Лорана над F_p от нескольких переменных.

Используются для K'' (переменные t1..td), для K' (S1..Sd) и для
произведения прямых (x, y). Показатель монома — кортеж целых длины
len(variables); отрицательные показатели допустимы.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from app.core.exceptions import DomainError, InexactDivisionError
from sympy.polys.domains import GF
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from .field import FieldElem, check_prime
from .laurent import LaurentPoly
from .valuation import INFINITY, Valuation

Exponents = tuple[int, ...]


@lru_cache(maxsize=None)
def _gf_ring(variables: tuple[str, ...], p: int):
    R, *_ = ring(",".join(variables), GF(p))
    return R


def variable_names(prefix: str, d: int) -> tuple[str, ...]:
    """("t1", ..., "td")."""
    return tuple(f"{prefix}{i}" for i in range(1, d + 1))


class MultiLaurentPoly:
    """
    Многочлен Лорана Σ c_a x^a над F_p, a ∈ Z^n.

    Хранит только ненулевые коэффициенты; объекты неизменяемы.
    """

    __slots__ = ("p", "variables", "_terms")

    def __init__(
        self,
        p: int,
        variables: Sequence[str],
        terms: Optional[dict[Exponents, int]] = None,
    ):
        check_prime(p)
        variables = tuple(variables)
        n = len(variables)
        clean: dict[Exponents, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise DomainError(
                    f"Exponent vector {exps} does not match variables {variables}",
                    details={"exponents": list(exps), "variables": list(variables)},
                )
            c = int(c) % p
            if c:
                clean[exps] = (clean.get(exps, 0) + c) % p
                if not clean[exps]:
                    del clean[exps]
        self.p = p
        self.variables = variables
        self._terms = clean

    @classmethod
    def _raw(
        cls, p: int, variables: tuple[str, ...], terms: dict[Exponents, int]
    ) -> "MultiLaurentPoly":
        obj = object.__new__(cls)
        obj.p = p
        obj.variables = variables
        obj._terms = terms
        return obj

    def _like(self, terms: dict[Exponents, int]) -> "MultiLaurentPoly":
        return MultiLaurentPoly._raw(self.p, self.variables, terms)

    # ==================== Конструкторы ====================

    @classmethod
    def zero(cls, p: int, variables: Sequence[str]) -> "MultiLaurentPoly":
        return cls(p, variables)

    @classmethod
    def constant(cls, p: int, variables: Sequence[str], c: int) -> "MultiLaurentPoly":
        return cls(p, variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(
        cls, p: int, variables: Sequence[str], exps: Sequence[int], coeff: int = 1
    ) -> "MultiLaurentPoly":
        return cls(p, variables, {tuple(exps): coeff})

    @classmethod
    def gen(cls, p: int, variables: Sequence[str], index: int) -> "MultiLaurentPoly":
        """Переменная с номером index (0-based)."""
        exps = [0] * len(variables)
        exps[index] = 1
        return cls(p, variables, {tuple(exps): 1})

    @classmethod
    def from_pairs(
        cls, p: int, variables: Sequence[str], pairs: Iterable[tuple[Sequence[int], int]]
    ) -> "MultiLaurentPoly":
        terms: dict[Exponents, int] = {}
        for exps, c in pairs:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
        return cls(p, variables, terms)

    # ==================== Доступ ====================

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        """Пары (показатели, коэффициент) в градуированно-лексикографическом порядке."""
        return iter(sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def coeff(self, exps: Sequence[int]) -> FieldElem:
        return FieldElem(self.p, self._terms.get(tuple(exps), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def to_pairs(self) -> list[list]:
        return [[list(e), c] for e, c in self.items()]

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for exps in self._terms for e in exps)

    def min_exponents(self) -> Exponents:
        """Покомпонентный минимум показателей (нули для нулевого многочлена)."""
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))

    # ==================== Нормирования ====================

    def min_total_degree(self) -> Valuation:
        """Минимум суммы показателей по мономам; +∞ для нуля (допускает Лоран)."""
        if not self._terms:
            return INFINITY
        return min(sum(exps) for exps in self._terms)

    def mindeg_total(self) -> Valuation:
        """
        Порядок обращения в нуль в начале координат.

        Raises:
            DomainError: если встречается отрицательный показатель
        """
        if self.has_negative_exponents():
            raise DomainError(
                "mindeg_total is defined for polynomials only", details={"poly": str(self)}
            )
        return self.min_total_degree()

    def ord_in(self, index: int) -> Valuation:
        """Порядок по одной переменной (нормирование вдоль оси)."""
        if not self._terms:
            return INFINITY
        return min(exps[index] for exps in self._terms)

    # ==================== Арифметика ====================

    def _check_same(self, other: "MultiLaurentPoly") -> None:
        if other.p != self.p or other.variables != self.variables:
            raise DomainError(
                f"Cannot combine F_{self.p}{list(self.variables)} "
                f"with F_{other.p}{list(other.variables)}"
            )

    def _coerce(self, other) -> Optional["MultiLaurentPoly"]:
        if isinstance(other, MultiLaurentPoly):
            self._check_same(other)
            return other
        if isinstance(other, (int, FieldElem)):
            return MultiLaurentPoly(self.p, self.variables, {(0,) * self.nvars: int(other)})
        return None

    def __add__(self, other) -> "MultiLaurentPoly":
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

    def __neg__(self) -> "MultiLaurentPoly":
        p = self.p
        return self._like({e: p - c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiLaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "MultiLaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "MultiLaurentPoly":
        if isinstance(other, (int, FieldElem)):
            k = int(other) % self.p
            if not k:
                return self._like({})
            return self._like({e: c * k % self.p for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        terms: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = (terms.get(e, 0) + c1 * c2) % p
        return self._like({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def frobenius(self) -> "MultiLaurentPoly":
        """x ↦ x^p."""
        p = self.p
        return self._like({tuple(a * p for a in e): c for e, c in self._terms.items()})

    def __pow__(self, n: int) -> "MultiLaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise DomainError("Only monomials are invertible")
            ((e, c),) = self._terms.items()
            inv = pow(c, -1, self.p)
            return self._like({tuple(a * n for a in e): pow(inv, -n, self.p)})
        result = MultiLaurentPoly._raw(self.p, self.variables, {(0,) * self.nvars: 1})
        base = self
        while n:
            n, digit = divmod(n, self.p)
            for _ in range(digit):
                result = result * base
            if n:
                base = base.frobenius()
        return result

    def shift(self, exps: Sequence[int]) -> "MultiLaurentPoly":
        """Умножение на моном x^exps."""
        return self._like(
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    def partial(self, index: int) -> "MultiLaurentPoly":
        """∂/∂x_index."""
        p = self.p
        terms: dict[Exponents, int] = {}
        for e, c in self._terms.items():
            v = c * e[index] % p
            if v:
                ne = list(e)
                ne[index] -= 1
                terms[tuple(ne)] = v
        return self._like(terms)

    def theta(self, index: int) -> "MultiLaurentPoly":
        """x_index·∂/∂x_index: коэффициент при dlog x_index."""
        p = self.p
        return self._like(
            {e: c * e[index] % p for e, c in self._terms.items() if (c * e[index]) % p}
        )

    def divexact(self, other: "MultiLaurentPoly") -> "MultiLaurentPoly":
        """
        Точное деление в F_p[x_1^{±1}, ..., x_n^{±1}].

        Мономиальные сдвиги снимаются, затем многочлены делятся в кольце
        sympy над GF(p).

        Raises:
            DomainError: деление на ноль
            InexactDivisionError: если частное не многочлен Лорана
        """
        o = self._coerce(other)
        if o is None or not o:
            raise DomainError("Division by zero polynomial")
        if not self:
            return self._like({})
        if len(o._terms) == 1:
            ((e, c),) = o._terms.items()
            inv = pow(c, -1, self.p)
            return self._like(
                {
                    tuple(a - b for a, b in zip(k, e)): v * inv % self.p
                    for k, v in self._terms.items()
                }
            )
        sa, sb = self.min_exponents(), o.min_exponents()
        R = _gf_ring(self.variables, self.p)
        num = R.from_dict({tuple(a - s for a, s in zip(e, sa)): c for e, c in self._terms.items()})
        den = R.from_dict({tuple(a - s for a, s in zip(e, sb)): c for e, c in o._terms.items()})
        try:
            quot = num.exquo(den)
        except ExactQuotientFailed as exc:
            raise InexactDivisionError(f"{self} is not divisible by {o}") from exc
        offset = tuple(a - b for a, b in zip(sa, sb))
        return self._like(
            {
                tuple(a + s for a, s in zip(e, offset)): int(c) % self.p
                for e, c in quot.items()
                if int(c) % self.p
            }
        )

    # ==================== Подстановки и симметрия ====================

    def permute(self, perm: Sequence[int]) -> "MultiLaurentPoly":
        """Переставить переменные: новая позиция perm[i] получает старую i."""
        terms: dict[Exponents, int] = {}
        n = self.nvars
        for e, c in self._terms.items():
            ne = [0] * n
            for i, a in enumerate(e):
                ne[perm[i]] = a
            terms[tuple(ne)] = c
        return self._like(terms)

    def swap(self, i: int, j: int) -> "MultiLaurentPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def is_symmetric(self) -> bool:
        """Инвариантность относительно всех транспозиций переменных."""
        return all(self.swap(i, j) == self for i, j in combinations(range(self.nvars), 2))

    def substitute(self, values: Sequence["MultiLaurentPoly"]) -> "MultiLaurentPoly":
        """
        Подставить values[i] вместо i-й переменной.

        Отрицательные степени допустимы только для мономиальных values[i].
        """
        if len(values) != self.nvars:
            raise DomainError("Substitution needs one value per variable")
        target = values[0]
        result = MultiLaurentPoly.zero(target.p, target.variables)
        powers: list[dict[int, MultiLaurentPoly]] = [{} for _ in values]

        def power(i: int, k: int) -> MultiLaurentPoly:
            if k not in powers[i]:
                powers[i][k] = values[i] ** k
            return powers[i][k]

        for e, c in self._terms.items():
            term = MultiLaurentPoly.constant(target.p, target.variables, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def rename(self, variables: Sequence[str]) -> "MultiLaurentPoly":
        variables = tuple(variables)
        if len(variables) != self.nvars:
            raise DomainError("Renaming must keep the number of variables")
        return MultiLaurentPoly._raw(self.p, variables, dict(self._terms))

    # ==================== Сравнение и печать ====================

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiLaurentPoly):
            return (
                self.p == other.p
                and self.variables == other.variables
                and self._terms == other._terms
            )
        if isinstance(other, (int, FieldElem)):
            c = int(other) % self.p
            return self._terms == ({(0,) * self.nvars: c} if c else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.variables, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = []
            for name, a in zip(self.variables, e):
                if a == 1:
                    factors.append(name)
                elif a:
                    factors.append(f"{name}^{a}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiLaurentPoly(F_{self.p}[{', '.join(self.variables)}]: {self})"


def mindeg_total(f: MultiLaurentPoly) -> Valuation:
    """Минимальная полная степень монома; +∞ для нуля."""
    return f.mindeg_total()


def embed(f: LaurentPoly, variables: Sequence[str], index: int) -> MultiLaurentPoly:
    """Поместить многочлен от одной переменной в index-ю переменную кольца."""
    variables = tuple(variables)
    n = len(variables)
    terms: dict[Exponents, int] = {}
    for e, c in f.items():
        exps = [0] * n
        exps[index] = e
        terms[tuple(exps)] = c
    return MultiLaurentPoly._raw(f.p, variables, terms)


def pullback_i(f: LaurentPoly, i: int, d: int, prefix: str = "t") -> MultiLaurentPoly:
    """
    pr_i^*: t ↦ t_i в K'' = Frac(U^d).

    Raises:
        DomainError: если i вне 1..d
    """
    if not 1 <= i <= d:
        raise DomainError(f"Projection index {i} is out of range 1..{d}", details={"i": i, "d": d})
    return embed(f, variable_names(prefix, d), i - 1)
