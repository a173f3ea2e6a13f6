"""
Exact arithmetic over F_q, F_q[t] and truncated Laurent expansions in 1/t
"""

from src.algebra.field import FieldElem, FieldSpec, field_arith
from src.algebra.laurent import Decomposition, LaurentExpansion, decompose, laurent_expand
from src.algebra.poly import (
    NEG_INF,
    POS_INF,
    Degree,
    Poly,
    all_polys,
    format_terms,
    poly_divmod,
    poly_gcd,
)

__all__ = [
    "FieldSpec",
    "FieldElem",
    "field_arith",
    "Poly",
    "Degree",
    "NEG_INF",
    "POS_INF",
    "poly_divmod",
    "poly_gcd",
    "all_polys",
    "format_terms",
    "LaurentExpansion",
    "Decomposition",
    "laurent_expand",
    "decompose",
]
