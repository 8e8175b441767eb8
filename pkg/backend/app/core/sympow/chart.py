"""
SymmetricChart — карта симметрической степени C^{(d)} около точки dP.

Переменные t_1..t_d — координаты на C^d, S_1..S_d — элементарные
симметрические функции от них, локальные координаты C^{(d)} в точке dP.
После раздутия в dP униформизатор исключительного дивизора — S_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from app.core.algebra import (
    LaurentPoly,
    MultiLaurentPoly,
    SFraction,
    check_prime,
    elementary,
    min_valuation,
    pullback_i,
    s_names,
    sfrac_normalize,
    t_names,
    v_exceptional,
)
from app.core.algebra.valuation import Valuation
from app.core.exceptions import DomainError
from app.core.settings import settings
from app.core.swan.differential import LogBasis, LogDifferential
from app.core.witt.universal import check_witt_length


@dataclass(frozen=True)
class SymmetricChart:
    """
    Attributes:
        p: характеристика
        m: длина векторов Витта минус один
        d: степень симметрического произведения, 2 <= d <= max_arity
    """

    p: int
    m: int
    d: int

    def __post_init__(self):
        check_prime(self.p)
        check_witt_length(self.m)
        if not isinstance(self.d, int) or not 2 <= self.d <= settings.max_arity:
            raise DomainError(
                f"d={self.d} is outside 2..{settings.max_arity}",
                details={"d": self.d, "max_arity": settings.max_arity},
            )

    @property
    def t_vars(self) -> tuple[str, ...]:
        return t_names(self.d)

    @property
    def s_vars(self) -> tuple[str, ...]:
        return s_names(self.d)

    def pullback(self, f: LaurentPoly, i: int) -> MultiLaurentPoly:
        """pr_i^* f, 1 <= i <= d."""
        return pullback_i(f, i, self.d)

    def e(self, k: int) -> MultiLaurentPoly:
        """e_k(t_1..t_d)."""
        return elementary(self.p, self.d, k)

    def substitution(self) -> list[MultiLaurentPoly]:
        """Таблица S_k ↦ e_k(t), k = 1..d."""
        return [self.e(k) for k in range(1, self.d + 1)]

    def s(self, k: int) -> SFraction:
        """S_k как симметрическая дробь; S_0 = 1."""
        return SFraction.gen(self.p, self.d, k)

    def t_zero(self) -> MultiLaurentPoly:
        return MultiLaurentPoly.zero(self.p, self.t_vars)

    def describe(self) -> dict:
        return {"p": self.p, "m": self.m, "d": self.d}


@dataclass(frozen=True)
class OmegaForm(LogDifferential):
    """
    ω = Σ_k c_k·dS_k/S_d на R'.

    coeffs — d симметрических дробей в канонической форме.
    """

    chart: Optional[SymmetricChart] = None

    @classmethod
    def of(cls, chart: SymmetricChart, coeffs: Sequence[SFraction]) -> "OmegaForm":
        coeffs = tuple(coeffs)
        if len(coeffs) != chart.d:
            raise DomainError(f"An OmegaForm on a d={chart.d} chart needs {chart.d} coefficients")
        return cls(LogBasis.SYMMETRIC, coeffs, chart)

    @classmethod
    def zero(cls, chart: SymmetricChart) -> "OmegaForm":
        return cls.of(chart, [SFraction.zero(chart.p, chart.d)] * chart.d)

    @classmethod
    def d_s(cls, chart: SymmetricChart, k: int) -> "OmegaForm":
        """dS_k = S_d·(dS_k/S_d); dS_0 = 0."""
        form = cls.zero(chart)
        if k < 1 or k > chart.d:
            return form
        coeffs = list(form.coeffs)
        coeffs[k - 1] = chart.s(chart.d)
        return cls.of(chart, coeffs)

    def div_sd(self, k: int = 1) -> "OmegaForm":
        return self._with(c.div_sd(k) for c in self.coeffs)

    def matrix_row(self) -> list[SFraction]:
        return list(self.coeffs)


def differential_exceptional(f: SFraction, chart: SymmetricChart) -> OmegaForm:
    """
    d(N/S_d^M) в базисе dS_k/S_d.

    dN = Σ_k (∂_k N·S_d)·dS_k/S_d, а d(S_d^{-M}) = −M·S_d^{-M}·dS_d/S_d.
    """
    num, M = f.numerator, f.den_pow
    sd = MultiLaurentPoly.gen(chart.p, chart.s_vars, chart.d - 1)
    coeffs = [sfrac_normalize(num.partial(k) * sd, M) for k in range(chart.d)]
    if M:
        coeffs[-1] = coeffs[-1] + sfrac_normalize(num * (-M), M)
    return OmegaForm.of(chart, coeffs)


def v_log_exceptional(omega: LogDifferential) -> Valuation:
    """v^log на R': минимум v_exceptional коэффициентов; +∞ для нуля."""
    if omega.basis is not LogBasis.SYMMETRIC:
        raise DomainError("v_log_exceptional expects a form in the dS_k/S_d basis")
    return min_valuation(v_exceptional(c) for c in omega.coeffs if c)
