"""
Regular continued fractions [a0; a1, ..., am] of rational points
"""

from dataclasses import dataclass
from typing import Tuple

from src.algebra import Poly, poly_divmod
from src.projective.point import ProjPoint
from src.utils.errors import InfinityNotExpandable, MalformedCF


@dataclass(frozen=True)
class ContinuedFraction:
    quotients: Tuple[Poly, ...]

    def __post_init__(self):
        if not self.quotients:
            raise MalformedCF("a continued fraction needs at least a0")
        for i, a in enumerate(self.quotients[1:], start=1):
            if a.is_constant:
                raise MalformedCF(f"partial quotient a{i} = {a} is constant")

    def __len__(self) -> int:
        return len(self.quotients)

    def __str__(self) -> str:
        head, rest = self.quotients[0], self.quotients[1:]
        if not rest:
            return f"[{head}]"
        return f"[{head}; {', '.join(str(a) for a in rest)}]"


def cf_expand(w: ProjPoint) -> ContinuedFraction:
    """Euclid on (num, den); every quotient after a0 is nonconstant"""
    if w.is_infinity:
        raise InfinityNotExpandable("inf has no continued fraction")
    quotients = []
    num, den = w.num, w.den
    while not den.is_zero:
        a, r = poly_divmod(num, den)
        quotients.append(a)
        num, den = den, r
    return ContinuedFraction(tuple(quotients))


def cf_assemble(cf: ContinuedFraction) -> ProjPoint:
    """Evaluate bottom-up"""
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    value = ProjPoint.from_poly(cf.quotients[-1])
    for a in reversed(cf.quotients[:-1]):
        value = value.reciprocal().translate(a)
    return value


def cf_length(w: ProjPoint) -> int:
    """Number of partial quotients; inf counts as one"""
    return 1 if w.is_infinity else len(cf_expand(w))
