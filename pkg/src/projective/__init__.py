"""
Projective line over F_q(t): points, triples and continued fractions
"""

from src.projective.continued_fraction import (
    ContinuedFraction,
    cf_assemble,
    cf_expand,
    cf_length,
)
from src.projective.point import (
    ProjPoint,
    diff_degree,
    point_degree,
    point_leading,
    polynomial_part,
)
from src.projective.triple import Triple, make_triple

__all__ = [
    "ProjPoint",
    "point_degree",
    "point_leading",
    "diff_degree",
    "polynomial_part",
    "Triple",
    "make_triple",
    "ContinuedFraction",
    "cf_expand",
    "cf_assemble",
    "cf_length",
]
