"""Характеры Артина–Шрайера–Витта и кондукторы Свона."""

from .character import (
    ASWCharacter,
    Reduction,
    ReductionStep,
    char_from_witt,
    character_order,
    is_trivial,
    is_unramified,
    reduce_representative,
    replay,
    same_class,
)
from .conductor import (
    RswClass,
    SwanCertificate,
    certify,
    fmd,
    rsw_class,
    rsw_levels,
    swan_conductor,
)
from .differential import (
    LogBasis,
    LogDifferential,
    dlog_form,
    in_fil_form,
    log_derivative,
    v_log,
    v_log_local,
)

__all__ = [
    "ASWCharacter",
    "Reduction",
    "ReductionStep",
    "char_from_witt",
    "character_order",
    "is_trivial",
    "is_unramified",
    "reduce_representative",
    "replay",
    "same_class",
    "RswClass",
    "SwanCertificate",
    "certify",
    "fmd",
    "rsw_class",
    "rsw_levels",
    "swan_conductor",
    "LogBasis",
    "LogDifferential",
    "dlog_form",
    "in_fil_form",
    "log_derivative",
    "v_log",
    "v_log_local",
]
