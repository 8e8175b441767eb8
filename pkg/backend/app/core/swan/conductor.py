"""
Кондуктор Свона и его сертификация.

Sw(χ) — наименьшее n >= 0 с χ ∈ fil_n. Верхняя граница берётся из
приведённого представителя (n = −v_witt), точность подтверждается
уточнённым кондуктором: если F^m d представителя имеет уровень ровно n,
то χ ∉ fil_{n−1}, так как индуцированное отображение
fil_n/fil_{n−1} → Ω инъективно при n−1 >= ⌊n/p⌋.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional

from app.core.algebra.valuation import INFINITY, Valuation, valuation_to_json
from app.core.witt.vector import WittVector, v_witt

from .character import ASWCharacter, reduce_representative
from .differential import (
    Differential,
    LogDifferential,
    coeff_to_json,
    default_differential,
    v_log,
)

logger = logging.getLogger(__name__)


def fmd(alpha: WittVector, differential: Optional[Differential] = None) -> LogDifferential:
    """
    F^m d(a_0, ..., a_m) = Σ_i a_i^{p^{m-i}-1}·da_i.

    differential задаёт d в нужной карте: dlog t для K (по умолчанию),
    (dlog x, dlog y) для произведения, dS_k/S_d для симметрической степени.
    """
    d = differential or default_differential
    p, m = alpha.ctx.p, alpha.ctx.m
    result: Optional[LogDifferential] = None
    for i, a in enumerate(alpha.components):
        if not a:
            continue
        term = d(a)
        exponent = p ** (m - i) - 1
        if exponent:
            term = term.scale(a**exponent)
        result = term if result is None else result + term
    if result is None:
        return d(alpha.components[0])
    return result


class RswClass(NamedTuple):
    n: int
    witness: LogDifferential


def conductor_upper(v: Valuation) -> int:
    """max(0, −v) для нормирования вектора Витта."""
    if v == INFINITY or v >= 0:
        return 0
    return int(-v)


def rsw_class(chi: ASWCharacter) -> RswClass:
    """(n, F^m d(reduced)): представитель rsw(χ) в fil_n/fil_{⌊n/p⌋}."""
    reduced, _ = reduce_representative(chi.alpha)
    return RswClass(conductor_upper(v_witt(reduced)), fmd(reduced))


def rsw_levels(n: int, p: int) -> range:
    """Уровни ⌊n/p⌋..n, на которых индуцированное отображение rsw инъективно."""
    return range(n // p, n + 1)


def witness_lower_bound(witness_level: Valuation, n_upper: int, p: int) -> int:
    """
    Нижняя граница по уровню свидетеля.

    Если F^m d имеет точный уровень w и w−1 входит в rsw_levels(n_upper, p),
    то χ ∉ fil_{w−1}, то есть Sw >= w.
    """
    if witness_level == -INFINITY or witness_level <= 0:
        return 0
    w = min(int(witness_level), n_upper)
    if w - 1 in rsw_levels(n_upper, p):
        return w
    return 0


@dataclass(frozen=True)
class SwanCertificate:
    """
    Значение кондуктора с подтверждением.

    Attributes:
        n: значение (при certified=False — верхняя граница)
        certified: точность подтверждена
        bounds: (lower, upper); при certified lower = upper = n
        reduced: приведённый представитель
        witness: F^m d представителя
        place: где считается кондуктор: "R", "R'" или "R3"
    """

    n: int
    certified: bool
    bounds: tuple[int, int]
    reduced: WittVector
    witness: LogDifferential
    place: str = "R"

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "certified": self.certified,
            "bounds": list(self.bounds),
            "place": self.place,
            "reduced": [coeff_to_json(a) for a in self.reduced.components],
            "witness": self.witness.to_dict(),
            "witness_valuation": valuation_to_json(v_log(self.witness)),
        }


def certify(
    reduced: WittVector,
    n_upper: int,
    witness: LogDifferential,
    p: int,
    place: str = "R",
) -> SwanCertificate:
    """Сертификат по верхней границе и свидетелю: точен, если v^log(witness) = −n."""
    if n_upper == 0:
        return SwanCertificate(0, True, (0, 0), reduced, witness, place)
    level = v_log(witness)
    if level == -n_upper:
        return SwanCertificate(n_upper, True, (n_upper, n_upper), reduced, witness, place)
    lower = witness_lower_bound(-level, n_upper, p)
    logger.info(
        "Uncertified conductor at %s: bounds [%d, %d], witness valuation %s",
        place,
        lower,
        n_upper,
        level,
    )
    return SwanCertificate(n_upper, False, (lower, n_upper), reduced, witness, place)


def swan_conductor(chi: ASWCharacter) -> SwanCertificate:
    """
    Кондуктор Свона χ с сертификатом.

    Неподтверждённый результат возвращается с флагом и границами, а не
    исключением.
    """
    reduced, _ = reduce_representative(chi.alpha)
    n_upper = conductor_upper(v_witt(reduced))
    return certify(reduced, n_upper, fmd(reduced), chi.p)
