"""
FieldElem — элементы простого поля F_p.

Коэффициенты всех многочленов лежат в F_p для p из настроенного набора
(settings.supported_primes). Корень p-й степени на F_p тождественен.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from app.core.exceptions import DomainError
from app.core.settings import settings
from sympy import isprime


@lru_cache(maxsize=None)
def _prime_ok(p: int, supported: tuple[int, ...]) -> bool:
    return p in supported and isprime(p)


def check_prime(p: int) -> int:
    """Проверить, что p — простое из поддерживаемого набора."""
    if not isinstance(p, int) or not _prime_ok(p, tuple(settings.supported_primes)):
        raise DomainError(
            f"p={p} is not a supported prime (supported: {list(settings.supported_primes)})",
            details={"p": p},
        )
    return p


@dataclass(frozen=True)
class FieldElem:
    """
    Элемент F_p.

    Attributes:
        p: простой модуль
        value: вычет в [0, p)
    """

    p: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.p)

    @classmethod
    def of(cls, p: int, value: int) -> "FieldElem":
        return cls(check_prime(p), value)

    @property
    def characteristic(self) -> int:
        return self.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise DomainError(f"Cannot combine elements of F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other) -> "FieldElem":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.p, self.value + v)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElem":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.p, self.value - v)

    def __rsub__(self, other) -> "FieldElem":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.p, v - self.value)

    def __mul__(self, other) -> "FieldElem":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.p, self.value * v)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.p, -self.value)

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElem(self.p, pow(self.value, n, self.p))

    def inverse(self) -> "FieldElem":
        if self.value == 0:
            raise DomainError("Zero has no inverse in F_p")
        return FieldElem(self.p, pow(self.value, -1, self.p))

    def __truediv__(self, other) -> "FieldElem":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * FieldElem(self.p, v).inverse()

    def frobenius(self) -> "FieldElem":
        # x^p = x на F_p
        return self

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.value))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"
