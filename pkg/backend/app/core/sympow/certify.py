"""
Проверки для симметрических степеней: базис ω_i, кондуктор χ^{(d)} на R',
поведение μ на фильтрации и числовая граница степени.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from app.core.algebra import SFraction, determinant, v_exceptional
from app.core.algebra.valuation import INFINITY, Valuation, valuation_to_json
from app.core.exceptions import DomainError, InternalConsistencyError
from app.core.swan.character import ASWCharacter
from app.core.swan.conductor import SwanCertificate, certify, conductor_upper, fmd, swan_conductor
from app.core.swan.differential import LogDifferential, v_log_local

from .chart import OmegaForm, SymmetricChart, differential_exceptional, v_log_exceptional
from .omega import omega_basis
from .pushforward import lambda_pushforward, mu_pushforward, v_witt_exceptional

logger = logging.getLogger(__name__)


# ==================== Базис ω_{jd+1..(j+1)d} ====================


@dataclass
class AnbasisReport:
    """Результат проверки того, что S_d^j·ω_{jd+1..(j+1)d} — базис над R'."""

    p: int
    d: int
    j: int
    matrix: list[list[SFraction]] = field(default_factory=list)
    det: SFraction | None = None
    entry_valuations: list[list[Valuation]] = field(default_factory=list)
    det_valuation: Valuation = INFINITY
    passed: bool = False

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "j": self.j,
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "det": str(self.det),
            "entry_valuations": [
                [valuation_to_json(v) for v in row] for row in self.entry_valuations
            ],
            "det_valuation": valuation_to_json(self.det_valuation),
            "status": "PASS" if self.passed else "FAIL",
        }


def _scale_by_sd_power(form: OmegaForm, chart: SymmetricChart, j: int) -> OmegaForm:
    if j >= 0:
        return form.scale(chart.s(chart.d) ** j)
    return form.div_sd(-j)


def anbasis_check(chart: SymmetricChart, j: int) -> AnbasisReport:
    """
    Матрица M строк S_d^j·ω_{jd+k}, k = 1..d, в базисе dS_k/S_d.

    PASS ⇔ все элементы лежат в R' (v >= 0) и det M — единица (v = 0).
    """
    d = chart.d
    report = AnbasisReport(p=chart.p, d=d, j=j)
    for k in range(1, d + 1):
        row = _scale_by_sd_power(omega_basis(chart, j * d + k), chart, j).matrix_row()
        report.matrix.append(row)
        report.entry_valuations.append([v_exceptional(x) for x in row])
    report.det = determinant(report.matrix)
    report.det_valuation = v_exceptional(report.det)
    report.passed = (
        all(v >= 0 for row in report.entry_valuations for v in row) and report.det_valuation == 0
    )
    return report


# ==================== Кондуктор на R' ====================


@dataclass(frozen=True)
class SympowCertificate:
    """Кондуктор χ на R и кондуктор χ^{(d)} на исключительном дивизоре."""

    upstairs: SwanCertificate
    exceptional: SwanCertificate
    d: int
    lambda_alpha: Any
    lambda_valuation: Valuation

    @property
    def expected(self) -> int:
        return self.upstairs.n // self.d

    def to_dict(self) -> dict:
        return {
            "upstairs": self.upstairs.n,
            "exceptional": self.exceptional.n,
            "certified": self.upstairs.certified and self.exceptional.certified,
            "d": self.d,
            "lambda": [str(x) for x in self.lambda_alpha.components],
            "lambda_valuation": valuation_to_json(self.lambda_valuation),
            "upstairs_certificate": self.upstairs.to_dict(),
            "exceptional_certificate": self.exceptional.to_dict(),
        }


def sympow_swan(chi: ASWCharacter, chart: SymmetricChart) -> SympowCertificate:
    """
    Sw_{R'}(χ^{(d)}) = ⌊Sw_R(χ)/d⌋ с сертификатом.

    λ(α) даёт верхнюю границу, μ(F^m d α) — свидетеля. Совпадение
    μ∘F^m d = F^m d∘λ проверяется на каждом вызове.

    Raises:
        InternalConsistencyError: v_{R'}(λα) < −⌊n/d⌋ или μ(F^m d α) ≠ F^m d(λα)
    """
    if chi.p != chart.p or chi.m != chart.m:
        raise DomainError("Character and chart disagree on p or m")
    upstairs = swan_conductor(chi)
    reduced = upstairs.reduced
    lam = lambda_pushforward(reduced, chart)
    lam_v = v_witt_exceptional(lam)
    if lam_v < -(upstairs.n // chart.d):
        raise InternalConsistencyError(
            "lambda alpha is below the bound -floor(n/d) on R'",
            details={"n": upstairs.n, "d": chart.d, "valuation": valuation_to_json(lam_v)},
        )
    witness = mu_pushforward(upstairs.witness, chart)
    direct = fmd(lam, lambda f: differential_exceptional(f, chart))
    if witness != direct:
        raise InternalConsistencyError(
            "mu(F^m d alpha) differs from F^m d(lambda alpha)",
            details={"mu": str(witness), "fmd_lambda": str(direct)},
        )

    exceptional = certify(lam, conductor_upper(lam_v), witness, chart.p, place="R'")
    if not upstairs.certified and exceptional.certified:
        logger.debug("Upstairs conductor uncertified, downgrading R' certificate (d=%d)", chart.d)
        exceptional = SwanCertificate(
            exceptional.n,
            False,
            (upstairs.bounds[0] // chart.d, exceptional.n),
            lam,
            witness,
            "R'",
        )
    return SympowCertificate(upstairs, exceptional, chart.d, lam, lam_v)


# ==================== Фильтрация и μ ====================


def mu_fil_check(omega: LogDifferential, chart: SymmetricChart) -> tuple[bool, Valuation]:
    """
    μ переводит fil_n в fil_{⌊n/d⌋}: v^log_{R'}(μω) >= −⌊n/d⌋, n = −v^log_R(ω).

    Возвращает (выполнено, v^log_{R'}(μω)).
    """
    level = v_log_local(omega)
    image = v_log_exceptional(mu_pushforward(omega, chart))
    if level == INFINITY:
        return image == INFINITY, image
    n = max(0, -int(level))
    return image >= -(n // chart.d), image


def min_degree_bound(genus: int, deg_mod: int) -> int:
    """max{2g − 1 + deg m, deg m}."""
    if genus < 0 or deg_mod < 0:
        raise DomainError(
            "Genus and modulus degree must be nonnegative",
            details={"genus": genus, "deg_mod": deg_mod},
        )
    return max(2 * genus - 1 + deg_mod, deg_mod)
