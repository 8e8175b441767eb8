"""
Точная арифметика: F_p, многочлены Лорана от одной и нескольких переменных,
симметрические дроби и мономиальные нормирования.
"""

from .field import FieldElem, check_prime
from .laurent import LaurentPoly, ord_t
from .multi import MultiLaurentPoly, embed, mindeg_total, pullback_i, variable_names
from .ops import RingOp, determinant, ring_ops
from .symmetric import (
    SFraction,
    elementary,
    s_names,
    sfrac_normalize,
    sym_to_elementary,
    t_names,
    v_exceptional,
)
from .valuation import INFINITY, Valuation, min_valuation, valuation_to_json

__all__ = [
    "FieldElem",
    "check_prime",
    "LaurentPoly",
    "ord_t",
    "MultiLaurentPoly",
    "embed",
    "mindeg_total",
    "pullback_i",
    "variable_names",
    "RingOp",
    "determinant",
    "ring_ops",
    "SFraction",
    "elementary",
    "s_names",
    "sfrac_normalize",
    "sym_to_elementary",
    "t_names",
    "v_exceptional",
    "INFINITY",
    "Valuation",
    "min_valuation",
    "valuation_to_json",
]
