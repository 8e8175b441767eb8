"""
Симметрические степени и раздутия: λ, μ, базис ω_i и проверки кондукторов
на исключительных дивизорах.
"""

from .certify import (
    AnbasisReport,
    SympowCertificate,
    anbasis_check,
    min_degree_bound,
    mu_fil_check,
    sympow_swan,
)
from .chart import OmegaForm, SymmetricChart, differential_exceptional, v_log_exceptional
from .omega import omega_basis, omega_jacobian, omega_recursive
from .product import (
    BlprodCertificate,
    DprodDecomposition,
    ProductChart,
    blprod_swan,
    dprod_decompose,
    external_sum,
    v_product,
)
from .pushforward import lambda_pushforward, lambda_upstairs, mu_pushforward, v_witt_exceptional

__all__ = [
    "AnbasisReport",
    "SympowCertificate",
    "anbasis_check",
    "min_degree_bound",
    "mu_fil_check",
    "sympow_swan",
    "OmegaForm",
    "SymmetricChart",
    "differential_exceptional",
    "v_log_exceptional",
    "omega_basis",
    "omega_jacobian",
    "omega_recursive",
    "BlprodCertificate",
    "DprodDecomposition",
    "ProductChart",
    "blprod_swan",
    "dprod_decompose",
    "external_sum",
    "v_product",
    "lambda_pushforward",
    "lambda_upstairs",
    "mu_pushforward",
    "v_witt_exceptional",
]
