"""
Position of a vertex on the quotient ray: v lies in the orbit of x_i for a unique i >= 0
"""

from src.domain import reduce
from src.projective import ProjPoint, Triple
from src.tree.vertex import Vertex, tripod_center


def vertex_class(v: Vertex) -> int:
    """
    The i with v in the orbit of x_i

    (f, f + t^n, inf) has tripod center v = (n, f). Its reduced form is centred at
    an apartment vertex x_m, and |m| is the class.
    """
    f = v.offset_point()
    T = Triple(f, f + ProjPoint.t_power(v.spec, v.level), ProjPoint.infinity(v.spec))
    return abs(tripod_center(reduce(T).reduced).level)
