"""
Moebius action on the projective line and the bijection g -> g.(0, 1, inf)
"""

from typing import Tuple

from src.algebra import FieldSpec, Poly
from src.group.matrix import GammaElem
from src.projective import ProjPoint, Triple

Vector = Tuple[Poly, Poly]


def act_point(g: GammaElem, w: ProjPoint) -> ProjPoint:
    """(a w + b)/(c w + d) in homogeneous coordinates, total on P^1"""
    x, y = w.num, w.den
    return ProjPoint(g.a * x + g.b * y, g.c * x + g.d * y)


def act_triple(g: GammaElem, T: Triple) -> Triple:
    return Triple(act_point(g, T.w1), act_point(g, T.w2), act_point(g, T.w3))


def _det(u: Vector, v: Vector) -> Poly:
    return u[0] * v[1] - u[1] * v[0]


def phi_inverse(T: Triple) -> GammaElem:
    """
    The matrix M with M.(0, 1, inf) = T

    Columns are v3 * det(v2, v1) and v1 * det(v3, v2) for the homogeneous vectors
    v_i = (num_i, den_i); this is the cross-ratio matrix with denominators cleared
    and stays valid when a point is inf. The determinant is not a unit in general.
    """
    v1, v2, v3 = ((w.num, w.den) for w in T)
    left = _det(v2, v1)
    right = _det(v3, v2)
    return GammaElem(left * v3[0], right * v1[0], left * v3[1], right * v1[1])


def phi(g: GammaElem) -> Triple:
    """g.(0, 1, inf)"""
    return act_triple(g, Triple.standard(g.spec))


def standard_triple(spec: FieldSpec) -> Triple:
    return Triple.standard(spec)
