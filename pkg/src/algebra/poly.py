"""
Polynomials in t over F_q
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple, Union

from src.algebra.field import FieldElem, FieldSpec
from src.utils.errors import DivisionByZero, FieldMismatch

# Degree sentinels: deg 0 = -inf and deg inf = +inf keep every comparison total
NEG_INF = float("-inf")
POS_INF = float("inf")

Degree = Union[int, float]


@dataclass(frozen=True)
class Poly:
    """
    Polynomial with coefficients indexed by exponent (low to high)

    Coefficients are field ints as used by FieldSpec. Trailing zeros are stripped
    on construction, so the zero polynomial is the empty tuple.
    """

    spec: FieldSpec
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (1,))

    @classmethod
    def constant(cls, spec: FieldSpec, c: Union[int, FieldElem]) -> "Poly":
        value = c.value if isinstance(c, FieldElem) else c % spec.p
        return cls(spec, (value,))

    @classmethod
    def monomial(cls, spec: FieldSpec, n: int, c: int = 1) -> "Poly":
        return cls(spec, (0,) * n + (c,))

    @classmethod
    def t(cls, spec: FieldSpec) -> "Poly":
        return cls.monomial(spec, 1)

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs, highest exponent first"""
        for e in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[e]:
                yield e, self.coeffs[e]

    def _check(self, other: "Poly") -> None:
        if self.spec != other.spec:
            raise FieldMismatch(f"cannot combine polynomials over {self.spec} and {other.spec}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.spec.add
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.spec, tuple(add(self.coefficient(i), other.coefficient(i)) for i in range(n)))

    def __neg__(self) -> "Poly":
        return Poly(self.spec, tuple(self.spec.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.spec)
        add, mul = self.spec.add, self.spec.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = add(out[i + j], mul(a, b))
        return Poly(self.spec, tuple(out))

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def scale(self, c: Union[int, FieldElem]) -> "Poly":
        value = c.value if isinstance(c, FieldElem) else c
        mul = self.spec.mul
        return Poly(self.spec, tuple(mul(value, a) for a in self.coeffs))

    def shift(self, n: int) -> "Poly":
        """Multiply by t^n (n >= 0)"""
        if self.is_zero or n == 0:
            return self
        return Poly(self.spec, (0,) * n + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.spec.inv(self.leading))

    def __str__(self) -> str:
        return format_terms(self.spec, self.terms())


def poly_divmod(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    """Euclidean division: f = q*g + r with deg r < deg g"""
    f._check(g)
    if g.is_zero:
        raise DivisionByZero("polynomial division by zero")
    spec = f.spec
    if f.degree < g.degree:
        return Poly.zero(spec), f
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    inv_lead = spec.inv(g.leading)
    quot = [0] * (len(rem) - dg)
    for shift in range(len(rem) - 1 - dg, -1, -1):
        c = spec.mul(rem[shift + dg], inv_lead)
        if c == 0:
            continue
        quot[shift] = c
        for i, gi in enumerate(g.coeffs):
            rem[shift + i] = spec.sub(rem[shift + i], spec.mul(c, gi))
    return Poly(spec, tuple(quot)), Poly(spec, tuple(rem))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0"""
    while not g.is_zero:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def all_polys(spec: FieldSpec, max_degree: int) -> Iterator[Poly]:
    """Every polynomial of degree <= max_degree, zero first"""
    q = spec.q
    for n in range(q ** (max_degree + 1)):
        coeffs = []
        for _ in range(max_degree + 1):
            n, r = divmod(n, q)
            coeffs.append(r)
        yield Poly(spec, tuple(coeffs))


def _format_coefficient(spec: FieldSpec, c: int, exponent: int) -> str:
    text = spec.format_element(c)
    if exponent == 0:
        return text
    if c == 1:
        return ""
    if "+" in text:
        return f"({text})"
    if "a" in text:
        return f"{text}*"
    return text


def format_terms(spec: FieldSpec, terms: Iterable[Tuple[int, int]]) -> str:
    """
    Print a (Laurent) polynomial from (exponent, coefficient) pairs, highest first

    Negative exponents print as ``t^-3``; the empty sum prints as ``0``.
    """
    parts: List[str] = []
    for e, c in terms:
        if c == 0:
            continue
        coeff = _format_coefficient(spec, c, e)
        if e == 0:
            parts.append(coeff)
        elif e == 1:
            parts.append(f"{coeff}t")
        else:
            parts.append(f"{coeff}t^{e}")
    return "+".join(parts) if parts else "0"
