"""
Parametrised bi-infinite geodesics and the shift along them
"""

from dataclasses import dataclass, field
from typing import List, Optional

from src.projective import ProjPoint, Triple, diff_degree
from src.tree.vertex import Vertex, end_truncation, tripod_center
from src.utils.errors import AnchorOffGeodesic


@dataclass(frozen=True)
class ParamGeodesic:
    """
    Geodesic from w1 (index -inf) to w3 (index +inf) with ``anchor`` at index 0

    Vertices are addressed internally by their offset from the apex, the highest
    vertex of the geodesic when both ends are finite; ``base`` is the apex offset
    of the anchor.
    """

    w1: ProjPoint
    w3: ProjPoint
    anchor: Vertex
    base: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.w1 == self.w3:
            raise AnchorOffGeodesic("a geodesic needs two distinct ends")
        s = self._offset(self.anchor)
        if s is None:
            raise AnchorOffGeodesic(f"{self.anchor} is not on the geodesic ({self.w1}, {self.w3})")
        object.__setattr__(self, "base", s)

    def _offset(self, v: Vertex) -> Optional[int]:
        L = v.level
        if self.w3.is_infinity:
            return L if v == end_truncation(self.w1, L) else None
        if self.w1.is_infinity:
            return -L if v == end_truncation(self.w3, L) else None
        apex = int(diff_degree(self.w1, self.w3))
        if L > apex:
            return None
        if v == end_truncation(self.w1, L):
            return L - apex
        if v == end_truncation(self.w3, L):
            return apex - L
        return None

    def _vertex(self, s: int) -> Vertex:
        if self.w3.is_infinity:
            return end_truncation(self.w1, s)
        if self.w1.is_infinity:
            return end_truncation(self.w3, -s)
        apex = int(diff_degree(self.w1, self.w3))
        if s <= 0:
            return end_truncation(self.w1, apex + s)
        return end_truncation(self.w3, apex - s)

    def contains(self, v: Vertex) -> bool:
        return self._offset(v) is not None

    def index_of(self, v: Vertex) -> int:
        s = self._offset(v)
        if s is None:
            raise AnchorOffGeodesic(f"{v} is not on the geodesic")
        return s - self.base

    def segment(self, a: int, b: int) -> List[Vertex]:
        step = 1 if b >= a else -1
        return [vertex_at(self, n) for n in range(a, b + step, step)]

    def __str__(self) -> str:
        return f"[{self.w1} -> {self.w3} @ {self.anchor}]"


def theta(T: Triple) -> ParamGeodesic:
    """The geodesic from w1 to w3 anchored at the projection of w2"""
    return ParamGeodesic(T.w1, T.w3, tripod_center(T))


def vertex_at(geodesic: ParamGeodesic, n: int) -> Vertex:
    return geodesic._vertex(geodesic.base + n)


def flow_shift(geodesic: ParamGeodesic, k: int = 1) -> ParamGeodesic:
    return ParamGeodesic(geodesic.w1, geodesic.w3, vertex_at(geodesic, k))
