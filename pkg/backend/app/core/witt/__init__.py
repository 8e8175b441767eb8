"""Кольца векторов Витта W_{m+1} на универсальных многочленах."""

from .cache import build_cache, clear_cache, get_context, inspect_cache
from .universal import UniversalPoly, WittContext, ghost, witt_universal_polys
from .vector import (
    WittVector,
    frobenius_witt,
    ghost_components,
    in_fil,
    teichmuller,
    v_witt,
    verschiebung,
    verschiebung_shift,
    witt_add,
    witt_mul,
    witt_neg,
    witt_sub,
    witt_sum,
)

__all__ = [
    "build_cache",
    "clear_cache",
    "get_context",
    "inspect_cache",
    "UniversalPoly",
    "WittContext",
    "ghost",
    "witt_universal_polys",
    "WittVector",
    "frobenius_witt",
    "ghost_components",
    "in_fil",
    "teichmuller",
    "v_witt",
    "verschiebung",
    "verschiebung_shift",
    "witt_add",
    "witt_mul",
    "witt_neg",
    "witt_sub",
    "witt_sum",
]
