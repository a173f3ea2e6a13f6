"""
Vertices (n, f) of the Bruhat-Tits tree, f a Laurent polynomial in t^(n+1) F_q[t]

The parent of (n, f) is (n+1, f without its t^(n+1) term); the q children are
(n-1, f + c t^n). Walking up through parents heads towards the end inf.
"""

from dataclasses import dataclass
from typing import Iterable, List, Mapping, Tuple, Union

from src.algebra import POS_INF, Degree, FieldSpec, format_terms, laurent_expand
from src.projective import ProjPoint, Triple, diff_degree, point_degree
from src.utils.errors import InfinityNotExpandable, InvalidVertex

Terms = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Vertex:
    spec: FieldSpec
    level: int
    terms: Terms = ()

    def __post_init__(self):
        live = {}
        for e, c in self.terms:
            if not 0 <= c < self.spec.q:
                raise InvalidVertex(f"coefficient {c} is not an element of F_{self.spec.q}")
            if c == 0:
                continue
            if e < self.level + 1:
                raise InvalidVertex(
                    f"offset term t^{e} is below t^{self.level + 1} for a vertex at level {self.level}"
                )
            live[e] = c
        object.__setattr__(self, "terms", tuple(sorted(live.items(), reverse=True)))

    @classmethod
    def make(cls, spec: FieldSpec, level: int, terms: Union[Mapping[int, int], Iterable] = ()) -> "Vertex":
        items = terms.items() if isinstance(terms, Mapping) else terms
        return cls(spec, level, tuple(items))

    @property
    def is_apartment(self) -> bool:
        """True for the vertices x_i = (i, 0) between 0 and inf"""
        return not self.terms

    def offset_point(self) -> ProjPoint:
        return ProjPoint.from_laurent(self.spec, dict(self.terms))

    def parent(self) -> "Vertex":
        return Vertex(self.spec, self.level + 1, tuple(t for t in self.terms if t[0] != self.level + 1))

    def children(self) -> List["Vertex"]:
        return [Vertex(self.spec, self.level - 1, self.terms + ((self.level, c),)) for c in range(self.spec.q)]

    def __str__(self) -> str:
        return f"({self.level}; {format_terms(self.spec, self.terms)})"


def apartment_vertex(spec: FieldSpec, i: int) -> Vertex:
    return Vertex(spec, i)


def standard_vertex(spec: FieldSpec) -> Vertex:
    """o = (0, 0)"""
    return Vertex(spec, 0)


def neighbors(v: Vertex) -> List[Vertex]:
    """Parent first, then the children for c = 0, ..., q-1"""
    return [v.parent()] + v.children()


def _ascent(v: Vertex, w: Vertex) -> Tuple[List[Vertex], List[Vertex]]:
    up_v, up_w = [v], [w]
    while up_v[-1].level < up_w[-1].level:
        up_v.append(up_v[-1].parent())
    while up_w[-1].level < up_v[-1].level:
        up_w.append(up_w[-1].parent())
    while up_v[-1] != up_w[-1]:
        up_v.append(up_v[-1].parent())
        up_w.append(up_w[-1].parent())
    return up_v, up_w


def distance(v: Vertex, w: Vertex) -> int:
    up_v, up_w = _ascent(v, w)
    return len(up_v) + len(up_w) - 2


def tree_path(v: Vertex, w: Vertex) -> List[Vertex]:
    """The unique path from v to w, both ends included"""
    up_v, up_w = _ascent(v, w)
    return up_v + up_w[-2::-1]


def end_truncation(w: ProjPoint, n: int) -> Vertex:
    """The vertex at level n on the geodesic from inf to w"""
    if w.is_infinity:
        raise InfinityNotExpandable("inf is not an end below inf")
    spec = w.spec
    deg = point_degree(w)
    if deg < n + 1:
        return Vertex(spec, n)
    expansion = laurent_expand(w, int(deg) - n)
    return Vertex(spec, n, tuple((e, c) for e, c in expansion.terms().items() if e >= n + 1))


def separation(w: ProjPoint, w2: ProjPoint) -> Degree:
    """Level at which the geodesics from inf to w and w2 part; +inf if one is inf"""
    if w.is_infinity or w2.is_infinity:
        return POS_INF
    return diff_degree(w, w2)


def tripod_center(T: Triple) -> Vertex:
    """Median of the three ends: the apex of the closest pair"""
    pairs = ((0, 1), (0, 2), (1, 2))
    i, j = min(pairs, key=lambda p: separation(T[p[0]], T[p[1]]))
    return end_truncation(T[i], int(separation(T[i], T[j])))
