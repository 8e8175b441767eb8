"""
λ и μ: перенос векторов Витта и дифференциалов с K на K'.

λ(α) = pr_1^*α ⊞ ... ⊞ pr_d^*α считается в переменных t_1..t_d; каждая
компонента симметрична и переписывается через S_1..S_d.

μ(c·dlog t) = Σ_j c(t_j)·dt_j/t_j; переход к базису dS_k/S_d делается
обращением матрицы Якоби ∂S_k/∂t_j по правилу Крамера.
"""

from __future__ import annotations

from app.core.algebra import (
    MultiLaurentPoly,
    determinant,
    embed,
    sym_to_elementary,
    v_exceptional,
)
from app.core.algebra.valuation import Valuation
from app.core.exceptions import (
    DomainError,
    InexactDivisionError,
    InternalConsistencyError,
    SymmetryError,
)
from app.core.swan.differential import LogBasis, LogDifferential
from app.core.witt.vector import WittVector, v_witt, witt_sum

from .chart import OmegaForm, SymmetricChart


def lambda_upstairs(alpha: WittVector, chart: SymmetricChart) -> WittVector:
    """Σ_i pr_i^*α в W_{m+1}(K''), до переписывания через S."""
    pulls = [alpha.map(lambda a, i=i: chart.pullback(a, i)) for i in range(1, chart.d + 1)]
    return witt_sum(pulls)


def lambda_pushforward(alpha: WittVector, chart: SymmetricChart) -> WittVector:
    """
    λ(α) ∈ W_{m+1}(K') с компонентами-симметрическими дробями.

    Raises:
        InternalConsistencyError: компонента суммы прообразов не симметрична
    """
    if alpha.ctx.p != chart.p:
        raise DomainError(f"Chart is over F_{chart.p}, vector over F_{alpha.ctx.p}")
    upstairs = lambda_upstairs(alpha, chart)
    components = []
    for i, comp in enumerate(upstairs.components):
        try:
            components.append(sym_to_elementary(comp))
        except SymmetryError as exc:
            raise InternalConsistencyError(
                f"Component {i} of the pulled-back Witt sum is not symmetric",
                details={"component": i, "poly": str(comp)},
            ) from exc
    return WittVector(alpha.ctx, components)


def v_witt_exceptional(vector: WittVector) -> Valuation:
    """v_witt на R' для вектора с компонентами-SFraction."""
    return v_witt(vector, v_exceptional)


def _jacobian_t(chart: SymmetricChart) -> list[list[MultiLaurentPoly]]:
    """A[j][k] = ∂S_{k+1}/∂t_{j+1} = e_k(t без t_{j+1})."""
    d = chart.d
    rows = []
    for j in range(d):
        rows.append([chart.e(k + 1).partial(j) for k in range(d)])
    return rows


def mu_pushforward(omega: LogDifferential, chart: SymmetricChart) -> OmegaForm:
    """
    μ(ω) для ω = c·dlog t в базисе dS_k/S_d.

    Решается Σ_k a_k·∂S_k/∂t_j = c(t_j)/t_j; коэффициент при dS_k/S_d
    равен S_d·a_k и переписывается через S.

    Raises:
        DomainError: форма не в базисе dlog t
        InternalConsistencyError: матрица Якоби вырождена или деление неточно
    """
    if omega.basis is not LogBasis.DLOG_T:
        raise DomainError("mu_pushforward expects a form in the dlog t basis")
    c = omega.coeffs[0]
    if c.p != chart.p:
        raise DomainError(f"Chart is over F_{chart.p}, form over F_{c.p}")
    if not c:
        return OmegaForm.zero(chart)

    d = chart.d
    t_vars = chart.t_vars
    # b_j = c(t_j)/t_j
    rhs = [
        embed(c, t_vars, j).shift(tuple(-1 if i == j else 0 for i in range(d))) for j in range(d)
    ]
    A = _jacobian_t(chart)
    det_a = determinant(A)
    if not det_a:
        raise InternalConsistencyError("Jacobian of S_1..S_d is singular", details={"d": d})

    e_d = chart.e(d)
    coeffs = []
    for k in range(d):
        replaced = [row[:k] + [rhs[j]] + row[k + 1 :] for j, row in enumerate(A)]
        numerator = determinant(replaced)
        try:
            a_k = numerator.divexact(det_a)
        except InexactDivisionError as exc:
            raise InternalConsistencyError(
                "Cramer quotient is not a Laurent polynomial", details={"k": k + 1}
            ) from exc
        coeffs.append(sym_to_elementary(a_k * e_d))
    return OmegaForm.of(chart, coeffs)
