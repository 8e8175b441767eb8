"""
Базис ω_i = Σ_j dt_j / t_j^i на R'.

Два независимых способа вычисления:
  - рекурсия по производящей функции P(T) = Π_j (T − t_j):
        dP = P · Σ_{r>=0} ω_{r+1} T^r,
    а для i <= 0 — по Q(T) = Π_j (1 − t_j T):
        dQ = −Q · Σ_{s>=0} ω_{−s} T^{s+1};
  - прямой путь через якобиан: ω_i = μ(t^{1−i}·dlog t).
Результаты обязаны совпадать.
"""

from __future__ import annotations

from functools import lru_cache

from app.core.algebra import LaurentPoly
from app.core.exceptions import InternalConsistencyError
from app.core.swan.differential import dlog_form

from .chart import OmegaForm, SymmetricChart
from .pushforward import mu_pushforward


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@lru_cache(maxsize=None)
def omega_recursive(chart: SymmetricChart, i: int) -> OmegaForm:
    """ω_i по рекурсии производящей функции."""
    d = chart.d
    if i >= 1:
        r = i - 1
        # Коэффициент при T^r: df_r = Σ_{k=0}^{min(r,d)} f_k·ω_{r+1−k},
        # f_k = (−1)^{d−k} S_{d−k}
        acc = OmegaForm.d_s(chart, d - r).scale(_sign(d - r)) if r < d else OmegaForm.zero(chart)
        for k in range(1, min(r, d) + 1):
            f_k = chart.s(d - k) * _sign(d - k)
            acc = acc - omega_recursive(chart, r + 1 - k).scale(f_k)
        # f_0 = (−1)^d S_d
        return acc.scale(_sign(d)).div_sd(1)

    q = -i
    # Коэффициент при T^{q+1}: dg_{q+1} = −Σ_{k=0}^{min(q,d)} g_k·ω_{−(q−k)}, g_k = (−1)^k S_k
    s = q + 1
    acc = OmegaForm.d_s(chart, s).scale(-_sign(s)) if s <= d else OmegaForm.zero(chart)
    for k in range(1, min(q, d) + 1):
        g_k = chart.s(k) * _sign(k)
        acc = acc - omega_recursive(chart, -(q - k)).scale(g_k)
    return acc


def omega_jacobian(chart: SymmetricChart, i: int) -> OmegaForm:
    """ω_i = μ(t^{1−i}·dlog t)."""
    return mu_pushforward(dlog_form(LaurentPoly.monomial(chart.p, 1 - i)), chart)


def omega_basis(chart: SymmetricChart, i: int) -> OmegaForm:
    """
    ω_i в базисе dS_k/S_d, проверенный двумя способами.

    Raises:
        InternalConsistencyError: способы дали разные формы
    """
    recursive = omega_recursive(chart, i)
    direct = omega_jacobian(chart, i)
    if recursive != direct:
        raise InternalConsistencyError(
            f"omega_{i} differs between the recursion and the Jacobian route",
            details={"i": i, "recursive": str(recursive), "jacobian": str(direct)},
        )
    return recursive
