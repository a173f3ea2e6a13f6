"""
Points of the projective line over F_q(t) as reduced fractions
"""

from dataclasses import dataclass
from typing import Mapping, Union

from src.algebra import (
    NEG_INF,
    POS_INF,
    Degree,
    FieldElem,
    FieldSpec,
    Poly,
    decompose,
    poly_divmod,
    poly_gcd,
)
from src.utils.errors import DivisionByZero, InfinityNotDecomposable


@dataclass(frozen=True)
class ProjPoint:
    """
    num/den in lowest terms with a monic denominator; inf is 1/0

    Construction always canonicalises, so two points are equal exactly when they
    denote the same value.
    """

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = self.num, self.den
        num._check(den)
        if num.is_zero and den.is_zero:
            raise DivisionByZero("0/0 is not a point of the projective line")
        spec = num.spec
        if den.is_zero:
            num = Poly.one(spec)
        elif num.is_zero:
            den = Poly.one(spec)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            if not den.is_monic:
                inv = spec.inv(den.leading)
                num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def make(cls, num: Poly, den: Poly) -> "ProjPoint":
        return cls(num, den)

    @classmethod
    def from_poly(cls, f: Poly) -> "ProjPoint":
        return cls(f, Poly.one(f.spec))

    @classmethod
    def zero(cls, spec: FieldSpec) -> "ProjPoint":
        return cls(Poly.zero(spec), Poly.one(spec))

    @classmethod
    def one(cls, spec: FieldSpec) -> "ProjPoint":
        return cls(Poly.one(spec), Poly.one(spec))

    @classmethod
    def infinity(cls, spec: FieldSpec) -> "ProjPoint":
        return cls(Poly.one(spec), Poly.zero(spec))

    @classmethod
    def t_power(cls, spec: FieldSpec, n: int) -> "ProjPoint":
        if n >= 0:
            return cls(Poly.monomial(spec, n), Poly.one(spec))
        return cls(Poly.one(spec), Poly.monomial(spec, -n))

    @classmethod
    def from_laurent(cls, spec: FieldSpec, terms: Mapping[int, int]) -> "ProjPoint":
        """Value of a finite Laurent polynomial given as {exponent: coefficient}"""
        live = {e: c for e, c in terms.items() if c}
        if not live:
            return cls.zero(spec)
        low = min(live)
        shift = -low if low < 0 else 0
        top = max(live) + shift
        num = Poly(spec, tuple(live.get(e - shift, 0) for e in range(top + 1)))
        return cls(num, Poly.monomial(spec, shift))

    @property
    def spec(self) -> FieldSpec:
        return self.num.spec

    @property
    def is_infinity(self) -> bool:
        return self.den.is_zero

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _finite(self, other: "ProjPoint") -> None:
        if self.is_infinity or other.is_infinity:
            raise InfinityNotDecomposable("arithmetic with inf is undefined")

    def __add__(self, other: "ProjPoint") -> "ProjPoint":
        self._finite(other)
        return ProjPoint(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "ProjPoint":
        if self.is_infinity:
            return self
        return ProjPoint(-self.num, self.den)

    def __sub__(self, other: "ProjPoint") -> "ProjPoint":
        return self + (-other)

    def __mul__(self, other: "ProjPoint") -> "ProjPoint":
        self._finite(other)
        return ProjPoint(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "ProjPoint") -> "ProjPoint":
        # x/0 = inf for x != 0; only 0/0 raises
        if self.is_infinity and other.is_infinity:
            raise DivisionByZero("inf/inf is undefined")
        return ProjPoint(self.num * other.den, self.den * other.num)

    def reciprocal(self) -> "ProjPoint":
        return ProjPoint(self.den, self.num)

    def translate(self, f: Poly) -> "ProjPoint":
        """omega + f; inf is fixed"""
        if self.is_infinity:
            return self
        return ProjPoint(self.num + f * self.den, self.den)

    def scale(self, c: Union[int, FieldElem]) -> "ProjPoint":
        """c * omega for a nonzero constant c; inf is fixed"""
        if self.is_infinity:
            return self
        return ProjPoint(self.num.scale(c), self.den)

    def polynomial_part(self) -> Poly:
        return polynomial_part(self)

    def fractional_degree(self) -> Degree:
        return decompose(self).frac_degree

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        num = str(self.num)
        if self.is_polynomial:
            return num
        den = str(self.den)
        if "+" in num:
            num = f"({num})"
        if "+" in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def point_degree(w: ProjPoint) -> Degree:
    if w.is_infinity:
        return POS_INF
    if w.is_zero:
        return NEG_INF
    return w.num.degree - w.den.degree


def point_leading(w: ProjPoint) -> FieldElem:
    """[omega]_L; 0 for omega = 0"""
    if w.is_infinity:
        raise InfinityNotDecomposable("inf has no leading coefficient")
    spec = w.spec
    return FieldElem(spec, w.num.leading)


def diff_degree(w: ProjPoint, w2: ProjPoint) -> Degree:
    """deg(w - w2); -inf iff the points coincide"""
    if w.is_infinity or w2.is_infinity:
        raise InfinityNotDecomposable("difference with inf has no degree")
    return point_degree(w - w2)


def polynomial_part(w: ProjPoint) -> Poly:
    """[omega] read off the Euclidean quotient"""
    if w.is_infinity:
        raise InfinityNotDecomposable("inf has no polynomial part")
    return poly_divmod(w.num, w.den)[0]
