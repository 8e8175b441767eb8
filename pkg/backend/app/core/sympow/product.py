"""
Произведение двух прямых X × Y, раздутое в точке D × E = (0, 0).

R_1, R_2 — нормирования вдоль осей x = 0 и y = 0, R_3 — нормирование
исключительного дивизора: порядок в начале координат (x, y — оба
униформизаторы R_3). Внешняя сумма χ_1 ⊠ 1 + 1 ⊠ χ_2 представлена вектором
α_1(x) ⊞ α_2(y).
"""

from __future__ import annotations

from dataclasses import dataclass

from app.core.algebra import LaurentPoly, MultiLaurentPoly, check_prime, embed
from app.core.algebra.valuation import INFINITY, Valuation, valuation_to_json
from app.core.exceptions import DomainError, InternalConsistencyError
from app.core.swan.character import ASWCharacter
from app.core.swan.conductor import SwanCertificate, certify, conductor_upper, fmd, swan_conductor
from app.core.swan.differential import LogBasis, LogDifferential, product_log_derivative
from app.core.witt.vector import WittVector, v_witt, witt_add

PRODUCT_VARIABLES = ("x", "y")


@dataclass(frozen=True)
class ProductChart:
    """Карта (x, y) с лог-базисом dlog x, dlog y и нормированием v_{R_3}."""

    p: int
    variables: tuple[str, str] = PRODUCT_VARIABLES

    def __post_init__(self):
        check_prime(self.p)

    def embed_x(self, f: LaurentPoly) -> MultiLaurentPoly:
        return embed(f, self.variables, 0)

    def embed_y(self, f: LaurentPoly) -> MultiLaurentPoly:
        return embed(f, self.variables, 1)

    def form(self, f: MultiLaurentPoly, g: MultiLaurentPoly) -> LogDifferential:
        """f·dlog x + g·dlog y."""
        return LogDifferential(LogBasis.PRODUCT, (f, g))

    def embed_form_x(self, omega: LogDifferential) -> LogDifferential:
        """c(t)·dlog t ↦ c(x)·dlog x."""
        c = omega.coeffs[0]
        return self.form(self.embed_x(c), MultiLaurentPoly.zero(self.p, self.variables))

    def embed_form_y(self, omega: LogDifferential) -> LogDifferential:
        c = omega.coeffs[0]
        return self.form(MultiLaurentPoly.zero(self.p, self.variables), self.embed_y(c))


def v_product(f: MultiLaurentPoly) -> Valuation:
    """v_{R_3}: минимум суммы показателей; +∞ для нуля."""
    return f.min_total_degree()


def external_sum(chi1: ASWCharacter, chi2: ASWCharacter) -> WittVector:
    """α_1(x) ⊞ α_2(y) в W_{m+1}(F_p(x, y))."""
    chart = ProductChart(chi1.p)
    return witt_add(chi1.alpha.map(chart.embed_x), chi2.alpha.map(chart.embed_y))


@dataclass(frozen=True)
class BlprodCertificate:
    first: SwanCertificate
    second: SwanCertificate
    joint: SwanCertificate

    @property
    def expected(self) -> int:
        return max(self.first.n, self.second.n)

    def to_dict(self) -> dict:
        return {
            "first": self.first.n,
            "second": self.second.n,
            "joint": self.joint.n,
            "certified": self.first.certified and self.second.certified and self.joint.certified,
            "joint_certificate": self.joint.to_dict(),
        }


def blprod_swan(chi1: ASWCharacter, chi2: ASWCharacter) -> BlprodCertificate:
    """
    Sw_{R_3}(χ_1 ⊠ 1 + 1 ⊠ χ_2) = max(Sw_{R_1} χ_1, Sw_{R_2} χ_2) с сертификатом.

    Свидетель: F^m d α_1(x) + F^m d α_2(y) в базисе (dlog x, dlog y); он
    сверяется с F^m d внешней суммы.

    Raises:
        InternalConsistencyError: свидетель не совпал с F^m d суммы
    """
    chart = ProductChart(chi1.p)
    first, second = swan_conductor(chi1), swan_conductor(chi2)
    joint_alpha = external_sum(ASWCharacter(first.reduced), ASWCharacter(second.reduced))
    witness = chart.embed_form_x(first.witness) + chart.embed_form_y(second.witness)
    direct = fmd(joint_alpha, product_log_derivative)
    if witness != direct:
        raise InternalConsistencyError(
            "F^m d of the external sum differs from the sum of the witnesses",
            details={"witness": str(witness), "fmd": str(direct)},
        )
    upper = conductor_upper(v_witt(joint_alpha, v_product))
    joint = certify(joint_alpha, upper, witness, chart.p, place="R3")
    if joint.certified and not (first.certified and second.certified):
        lower = max(first.bounds[0], second.bounds[0])
        joint = SwanCertificate(joint.n, False, (lower, joint.n), joint_alpha, witness, "R3")
    return BlprodCertificate(first, second, joint)


@dataclass(frozen=True)
class DprodDecomposition:
    """ω = f·dlog x + g·dlog y с уровнями фильтрации частей."""

    part_x: LogDifferential
    part_y: LogDifferential
    level_x: Valuation
    level_y: Valuation

    @property
    def joint_level(self) -> Valuation:
        return max(self.level_x, self.level_y)

    def recombine(self) -> LogDifferential:
        return self.part_x + self.part_y

    def to_dict(self) -> dict:
        return {
            "part_x": self.part_x.to_dict(),
            "part_y": self.part_y.to_dict(),
            "level_x": valuation_to_json(self.level_x),
            "level_y": valuation_to_json(self.level_y),
            "joint_level": valuation_to_json(self.joint_level),
        }


def _level(f: MultiLaurentPoly) -> Valuation:
    v = v_product(f)
    return -INFINITY if v == INFINITY else -v


def dprod_decompose(omega: LogDifferential) -> DprodDecomposition:
    """
    Разложить форму на R_3 по dlog x и dlog y.

    Уровень ω равен −min(v_{R_3}(f), v_{R_3}(g)); для нуля −∞.
    """
    if omega.basis is not LogBasis.PRODUCT:
        raise DomainError("dprod_decompose expects a form in the (dlog x, dlog y) basis")
    f, g = omega.coeffs
    zero = f * 0
    part_x = LogDifferential(LogBasis.PRODUCT, (f, zero))
    part_y = LogDifferential(LogBasis.PRODUCT, (zero, g))
    return DprodDecomposition(part_x, part_y, _level(f), _level(g))
