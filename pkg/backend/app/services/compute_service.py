"""
Compute Service — вычисления для команд swan, rsw, lambda, sympow-swan,
blprod-swan, omega-basis и min-degree.

Каждая функция принимает RunConfig и текст полиномиальных аргументов и
возвращает ComputeResult: словарь для вывода и флаг сертификации (для
строгого режима).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from app.core.algebra.valuation import valuation_to_json
from app.core.logging import get_logger
from app.core.swan import char_from_witt, rsw_class, rsw_levels, swan_conductor, v_log_local
from app.core.sympow import (
    ProductChart,
    SymmetricChart,
    blprod_swan,
    lambda_pushforward,
    min_degree_bound,
    omega_basis,
    sympow_swan,
    v_log_exceptional,
    v_witt_exceptional,
)
from app.core.witt import get_context
from app.schemas.contracts.payload import parse_witt
from app.schemas.run_config import RunConfig

logger = get_logger(__name__)


@dataclass(frozen=True)
class ComputeResult:
    payload: Any
    certified: bool = True


def _character(config: RunConfig, alpha_text: str):
    ctx = get_context(config.p, config.m, cache_dir=config.cache_dir)
    return char_from_witt(parse_witt(alpha_text, ctx))


def compute_swan(config: RunConfig, alpha_text: str) -> ComputeResult:
    """Кондуктор Свона δ(α) на R."""
    cert = swan_conductor(_character(config, alpha_text))
    logger.info("swan_computed", p=config.p, m=config.m, n=cert.n, certified=cert.certified)
    return ComputeResult(
        {
            "swan": cert.n,
            "certified": cert.certified,
            "bounds": list(cert.bounds),
            "certificate": cert.to_dict(),
        },
        cert.certified,
    )


def compute_rsw(config: RunConfig, alpha_text: str) -> ComputeResult:
    """Уровень n и свидетель F^m d приведённого представителя."""
    chi = _character(config, alpha_text)
    n, witness = rsw_class(chi)
    levels = rsw_levels(n, config.p)
    return ComputeResult(
        {
            "n": n,
            "witness": witness.to_dict(),
            "witness_valuation": valuation_to_json(v_log_local(witness)),
            "injective_levels": [levels.start, levels.stop - 1],
        }
    )


def compute_lambda(config: RunConfig, alpha_text: str) -> ComputeResult:
    """λ(α) в W_{m+1}(K') и его нормирование на R'."""
    chart = SymmetricChart(config.p, config.m, config.d)
    chi = _character(config, alpha_text)
    lam = lambda_pushforward(chi.alpha, chart)
    return ComputeResult(
        {
            "d": chart.d,
            "lambda": [str(c) for c in lam.components],
            "components": [c.to_dict() for c in lam.components],
            "valuation": valuation_to_json(v_witt_exceptional(lam)),
        }
    )


def compute_sympow_swan(config: RunConfig, alpha_text: str) -> ComputeResult:
    """Кондукторы χ на R и χ^{(d)} на R'."""
    chart = SymmetricChart(config.p, config.m, config.d)
    cert = sympow_swan(_character(config, alpha_text), chart)
    data = cert.to_dict()
    logger.info(
        "sympow_swan_computed",
        d=chart.d,
        upstairs=cert.upstairs.n,
        exceptional=cert.exceptional.n,
        certified=data["certified"],
    )
    return ComputeResult(data, data["certified"])


def compute_blprod_swan(config: RunConfig, alpha_text: str, beta_text: str) -> ComputeResult:
    """Кондуктор χ_1 ⊠ 1 + 1 ⊠ χ_2 на исключительном дивизоре R_3."""
    cert = blprod_swan(_character(config, alpha_text), _character(config, beta_text))
    data = cert.to_dict()
    return ComputeResult(data, data["certified"])


def compute_omega_basis(config: RunConfig, indices: Sequence[int]) -> ComputeResult:
    """ω_i в базисе dS_k/S_d (обе процедуры вычисления сверяются)."""
    chart = SymmetricChart(config.p, config.m, config.d)
    rows = []
    for i in indices:
        omega = omega_basis(chart, i)
        rows.append(
            {
                "i": i,
                "omega": str(omega),
                "coeffs": [str(c) for c in omega.coeffs],
                "valuation": valuation_to_json(v_log_exceptional(omega)),
            }
        )
    return ComputeResult({"p": chart.p, "d": chart.d, "basis": "dS_k/S_d", "forms": rows})


def compute_min_degree(genus: int, deg_mod: int) -> ComputeResult:
    return ComputeResult(min_degree_bound(genus, deg_mod))
