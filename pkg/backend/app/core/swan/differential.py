"""
LogDifferential — дифференциальные формы с логарифмическими полюсами.

Форма хранится коэффициентами в объявленном лог-базисе:
  - dlog t                     (локальное поле K, униформизатор t)
  - dS_1/S_d, ..., dS_d/S_d    (карта симметрической степени, R')
  - dlog x, dlog y             (произведение прямых, R_3)
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Callable

from app.core.algebra import LaurentPoly, MultiLaurentPoly, SFraction
from app.core.algebra.valuation import INFINITY, Valuation
from app.core.exceptions import DomainError
from app.core.witt.vector import default_valuation


class LogBasis(str, Enum):
    DLOG_T = "dlog t"
    SYMMETRIC = "dS_k/S_d"
    PRODUCT = "dlog x, dlog y"


def coeff_to_json(c: Any) -> Any:
    if isinstance(c, SFraction):
        return c.to_dict()
    if isinstance(c, (LaurentPoly, MultiLaurentPoly)):
        return c.to_pairs()
    return str(c)


@dataclass(frozen=True)
class LogDifferential:
    """
    ω = Σ coeffs[k]·e_k, где e_k — элементы базиса basis.

    Attributes:
        basis: тег лог-базиса (неизменяем)
        coeffs: коэффициенты, по одному на элемент базиса
    """

    basis: LogBasis
    coeffs: tuple

    def _with(self, coeffs) -> "LogDifferential":
        return replace(self, coeffs=tuple(coeffs))

    def _check_same(self, other: "LogDifferential") -> None:
        if other.basis != self.basis or len(other.coeffs) != len(self.coeffs):
            raise DomainError(
                f"Cannot add forms in bases {self.basis.value} and {other.basis.value}"
            )

    def __add__(self, other: "LogDifferential") -> "LogDifferential":
        if not isinstance(other, LogDifferential):
            return NotImplemented
        self._check_same(other)
        return self._with(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "LogDifferential":
        return self._with(-a for a in self.coeffs)

    def __sub__(self, other: "LogDifferential") -> "LogDifferential":
        if not isinstance(other, LogDifferential):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Any) -> "LogDifferential":
        """Умножить все коэффициенты на элемент кольца."""
        return self._with(factor * a for a in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_dict(self) -> dict:
        return {
            "basis": self.basis.value,
            "coeffs": [coeff_to_json(c) for c in self.coeffs],
            "text": str(self),
        }

    def basis_labels(self) -> list[str]:
        if self.basis is LogBasis.DLOG_T:
            return ["dlog t"]
        if self.basis is LogBasis.PRODUCT:
            return ["dlog x", "dlog y"]
        d = len(self.coeffs)
        return [f"dS{k}/S{d}" for k in range(1, d + 1)]

    def __str__(self) -> str:
        parts = [
            f"({c})·{label}"
            for c, label in zip(self.coeffs, self.basis_labels())
            if c
        ]
        return " + ".join(parts) if parts else "0"


def dlog_form(c: LaurentPoly) -> LogDifferential:
    """c·dlog t."""
    return LogDifferential(LogBasis.DLOG_T, (c,))


def log_derivative(a: LaurentPoly) -> LogDifferential:
    """da = θ(a)·dlog t, θ = t·d/dt."""
    return dlog_form(a.theta())


def product_log_derivative(a: MultiLaurentPoly) -> LogDifferential:
    """df = (x∂_x f)·dlog x + (y∂_y f)·dlog y."""
    if a.nvars != 2:
        raise DomainError("The product chart has exactly two coordinates")
    return LogDifferential(LogBasis.PRODUCT, (a.theta(0), a.theta(1)))


def default_differential(a: Any) -> LogDifferential:
    if isinstance(a, LaurentPoly):
        return log_derivative(a)
    if isinstance(a, MultiLaurentPoly):
        return product_log_derivative(a)
    raise DomainError(f"No differential known for {type(a).__name__}")


Differential = Callable[[Any], LogDifferential]


def v_log_local(omega: LogDifferential) -> Valuation:
    """v^log_R для формы в базисе dlog t: ord_t коэффициента."""
    if omega.basis is not LogBasis.DLOG_T:
        raise DomainError("v_log_local expects a form in the dlog t basis")
    return omega.coeffs[0].ord()


def v_log(omega: LogDifferential) -> Valuation:
    """Наибольшее n с ω ∈ π^n·Ω(log): минимум нормирований коэффициентов."""
    result: Valuation = INFINITY
    for c in omega.coeffs:
        if c:
            result = min(result, default_valuation(c))
    return result


def in_fil_form(omega: LogDifferential, n: int) -> bool:
    """ω ∈ fil_n ⇔ v^log(ω) >= −n."""
    return v_log(omega) >= -n
