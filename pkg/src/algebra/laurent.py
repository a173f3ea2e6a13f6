"""
Truncated expansions in powers of 1/t and the polynomial/fractional split of a value

Expansions are for display and for reading off coordinates; degrees, leading terms
and polynomial parts of rational values are always computed exactly from the fraction.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, NamedTuple, Tuple, Union

from src.algebra.field import FieldElem, FieldSpec
from src.algebra.poly import NEG_INF, Degree, Poly, format_terms, poly_divmod
from src.utils.errors import (
    InfinityNotDecomposable,
    InfinityNotExpandable,
    PrecisionExhausted,
)

if TYPE_CHECKING:
    from src.projective.point import ProjPoint


@dataclass(frozen=True)
class LaurentExpansion:
    """
    First ``depth`` digits of a value in F_q((1/t))

    ``coeffs[i]`` is the coefficient of t^(top - i). The zero value has an empty
    coefficient list and ``top = -inf``.
    """

    spec: FieldSpec
    top: Degree
    coeffs: Tuple[int, ...]
    exact: bool

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def depth(self) -> int:
        return len(self.coeffs)

    @property
    def bottom(self) -> Degree:
        """Lowest exponent covered by the digits"""
        return self.top - len(self.coeffs) + 1 if self.coeffs else NEG_INF

    def terms(self) -> Dict[int, int]:
        return {self.top - i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient(self, e: int) -> int:
        if not self.coeffs or e > self.top or e < self.bottom:
            return 0
        return self.coeffs[self.top - e]

    def __str__(self) -> str:
        body = format_terms(self.spec, sorted(self.terms().items(), reverse=True))
        if self.exact:
            return body
        return f"{body}+O(t^{self.bottom - 1})"


def laurent_expand(x: "ProjPoint", depth: int) -> LaurentExpansion:
    """Expand num/den in powers of 1/t to ``depth`` digits starting at deg x"""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if x.den.is_zero:
        raise InfinityNotExpandable("inf has no expansion in powers of 1/t")
    spec = x.num.spec
    if x.num.is_zero:
        return LaurentExpansion(spec, NEG_INF, (), True)
    n = x.num.degree - x.den.degree
    low = n - depth + 1
    shift = max(0, -low)
    quot, rem = poly_divmod(x.num.shift(shift), x.den)
    coeffs = tuple(quot.coefficient(e + shift) for e in range(n, low - 1, -1))
    exact = rem.is_zero and not any(quot.coeffs[: max(0, low + shift)])
    return LaurentExpansion(spec, n, coeffs, exact)


class Decomposition(NamedTuple):
    poly_part: Poly
    frac_degree: Degree
    leading: FieldElem
    degree: Degree


def decompose(alpha: Union[LaurentExpansion, "ProjPoint"]) -> Decomposition:
    """
    Split a value into [alpha], deg {alpha}, the leading coefficient and deg alpha

    Rational input is handled exactly. A truncated expansion must show a nonzero
    negative-exponent digit or be exact, otherwise the fractional degree is unknown.
    """
    if isinstance(alpha, LaurentExpansion):
        return _decompose_expansion(alpha)
    if alpha.den.is_zero:
        raise InfinityNotDecomposable("inf has no polynomial part")
    spec = alpha.num.spec
    if alpha.num.is_zero:
        return Decomposition(Poly.zero(spec), NEG_INF, spec.zero, NEG_INF)
    quot, rem = poly_divmod(alpha.num, alpha.den)
    frac_degree = rem.degree - alpha.den.degree if not rem.is_zero else NEG_INF
    leading = FieldElem(spec, spec.mul(alpha.num.leading, spec.inv(alpha.den.leading)))
    return Decomposition(quot, frac_degree, leading, alpha.num.degree - alpha.den.degree)


def _decompose_expansion(alpha: LaurentExpansion) -> Decomposition:
    spec = alpha.spec
    if alpha.is_zero:
        return Decomposition(Poly.zero(spec), NEG_INF, spec.zero, NEG_INF)
    terms = alpha.terms()
    top = int(alpha.top)
    poly_part = Poly(spec, tuple(terms.get(e, 0) for e in range(0, max(top, -1) + 1)))
    negative = [e for e in terms if e < 0]
    if negative:
        frac_degree: Degree = max(negative)
    elif alpha.exact:
        frac_degree = NEG_INF
    else:
        raise PrecisionExhausted(
            f"no nonzero digit below t^0 within {alpha.depth} digits; expand deeper"
        )
    return Decomposition(poly_part, frac_degree, FieldElem(spec, alpha.coeffs[0]), alpha.top)
