"""
2x2 polynomial matrices up to scalars (PGL_2 over F_q(t))
"""

from dataclasses import dataclass
from typing import Tuple

from src.algebra import FieldSpec, Poly, poly_gcd
from src.projective import ProjPoint
from src.utils.errors import DivisionByZero, FieldMismatch


@dataclass(frozen=True)
class GammaElem:
    """
    Matrix [[a, b], [c, d]] in canonical form

    The entries have no common polynomial factor and the first nonzero entry in
    row-major order is monic. Two matrices are equal exactly when they are equal
    in PGL_2. Membership in PGL_2(F_q[t]) is the flag ``in_gamma``.
    """

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    def __post_init__(self):
        entries = (self.a, self.b, self.c, self.d)
        spec = self.a.spec
        if any(e.spec != spec for e in entries):
            raise FieldMismatch("matrix mixes entries over different fields")
        if (self.a * self.d - self.b * self.c).is_zero:
            raise DivisionByZero("singular matrix is not in PGL_2")
        content = Poly.zero(spec)
        for e in entries:
            content = poly_gcd(content, e)
        if content.degree > 0:
            entries = tuple(e // content for e in entries)
        first = next(e for e in entries if not e.is_zero)
        if not first.is_monic:
            inv = spec.inv(first.leading)
            entries = tuple(e.scale(inv) for e in entries)
        for name, e in zip("abcd", entries):
            object.__setattr__(self, name, e)

    @classmethod
    def make(cls, a: Poly, b: Poly, c: Poly, d: Poly) -> "GammaElem":
        return cls(a, b, c, d)

    @classmethod
    def from_fractions(cls, a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> "GammaElem":
        """Clear denominators of rational entries before canonicalising"""
        entries = (a, b, c, d)
        if any(e.is_infinity for e in entries):
            raise DivisionByZero("matrix entries must be finite")
        common = Poly.one(a.spec)
        for e in entries:
            common = common * e.den // poly_gcd(common, e.den)
        return cls(*(e.num * (common // e.den) for e in entries))

    @classmethod
    def identity(cls, spec: FieldSpec) -> "GammaElem":
        one, zero = Poly.one(spec), Poly.zero(spec)
        return cls(one, zero, zero, one)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    def entries(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return self.a, self.b, self.c, self.d

    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    @property
    def in_gamma(self) -> bool:
        return self.det().degree == 0

    @property
    def max_entry_degree(self) -> int:
        return max(int(e.degree) for e in self.entries() if not e.is_zero)

    def __matmul__(self, other: "GammaElem") -> "GammaElem":
        return compose(self, other)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def compose(g: GammaElem, h: GammaElem) -> GammaElem:
    """Matrix product g*h"""
    return GammaElem(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def inverse(g: GammaElem) -> GammaElem:
    """Adjugate; equal to the inverse in PGL_2"""
    return GammaElem(g.d, -g.b, -g.c, g.a)


def h_matrix(spec: FieldSpec, power: int = 1) -> GammaElem:
    """diag(t^power, 1); negative powers give diag(1, t^-power)"""
    one = Poly.one(spec)
    zero = Poly.zero(spec)
    if power >= 0:
        return GammaElem(Poly.monomial(spec, power), zero, zero, one)
    return GammaElem(one, zero, zero, Poly.monomial(spec, -power))
