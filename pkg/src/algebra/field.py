"""
Finite fields F_q with q = p^k

Elements are stored as plain ints in [0, q): the base-p digits of the int are the
coordinates of the element over F_p in the basis 1, a, a^2, ... where a is a root of
the modulus. Polynomials keep these ints as coefficients, so the hot paths never
allocate element objects.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, List, Tuple, Union

from src.utils.errors import DivisionByZero, FieldMismatch, InvalidFieldSpec


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _strip(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _fp_mod(f: List[int], g: List[int], p: int) -> List[int]:
    """Remainder of f by monic g over F_p (coefficient lists, low to high)"""
    f = _strip(list(f))
    dg = len(g) - 1
    while len(f) - 1 >= dg:
        c = f[-1]
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _strip(f)
    return f


def _is_irreducible(modulus: Tuple[int, ...], p: int) -> bool:
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _fp_mod(list(modulus), list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """
    Description of F_q

    Args:
        p: characteristic (prime)
        k: extension degree
        modulus: coefficients of the defining polynomial in ``a``, low to high;
            empty for prime fields, otherwise degree k and irreducible over F_p
    """

    p: int
    k: int = 1
    modulus: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidFieldSpec(f"characteristic {self.p} is not prime")
        if self.k < 1:
            raise InvalidFieldSpec("extension degree must be at least 1")
        modulus = tuple(c % self.p for c in self.modulus)
        while modulus and modulus[-1] == 0:
            modulus = modulus[:-1]
        if self.k == 1:
            if modulus and len(modulus) != 2:
                raise InvalidFieldSpec("a prime field takes no modulus")
            modulus = ()
        else:
            if len(modulus) != self.k + 1:
                raise InvalidFieldSpec(f"modulus must have degree {self.k}")
            lead_inv = pow(modulus[-1], self.p - 2, self.p)
            modulus = tuple(c * lead_inv % self.p for c in modulus)
            if not _is_irreducible(modulus, self.p):
                raise InvalidFieldSpec("modulus is reducible over F_p")
        object.__setattr__(self, "modulus", modulus)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def element(self, x: Union[int, Tuple[int, ...], "FieldElem"]) -> "FieldElem":
        """Coerce an int (reduced mod p) or a coordinate tuple into the field"""
        if isinstance(x, FieldElem):
            if x.spec != self:
                raise FieldMismatch("element belongs to another field")
            return x
        if isinstance(x, tuple):
            if len(x) > self.k:
                raise InvalidFieldSpec(f"expected at most {self.k} coordinates")
            return FieldElem(self, self.encode(x))
        return FieldElem(self, x % self.p)

    def elements(self) -> List["FieldElem"]:
        return [FieldElem(self, v) for v in range(self.q)]

    def nonzero(self) -> Iterator[int]:
        return iter(range(1, self.q))

    # int-level arithmetic used by Poly

    def digits(self, v: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.k):
            v, r = divmod(v, self.p)
            out.append(r)
        return tuple(out)

    def encode(self, coords) -> int:
        v = 0
        for c in reversed(tuple(coords)):
            v = v * self.p + c % self.p
        return v

    def add(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x + y) % self.p
        return self._add_table[x][y]

    def neg(self, x: int) -> int:
        if self.k == 1:
            return -x % self.p
        return self.encode(-c for c in self.digits(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.k == 1:
            return x * y % self.p
        return self._mul_table[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("zero has no inverse in F_q")
        if self.k == 1:
            return pow(x, self.p - 2, self.p)
        return self._inv_table[x]

    @cached_property
    def _add_table(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(self.encode(a + b for a, b in zip(self.digits(x), self.digits(y))) for y in range(self.q))
            for x in range(self.q)
        )

    def _mul_slow(self, x: int, y: int) -> int:
        dx, dy = self.digits(x), self.digits(y)
        prod = [0] * (2 * self.k - 1)
        for i, a in enumerate(dx):
            for j, b in enumerate(dy):
                prod[i + j] = (prod[i + j] + a * b) % self.p
        return self.encode(_fp_mod(prod, list(self.modulus), self.p))

    @cached_property
    def _mul_table(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self._mul_slow(x, y) for y in range(self.q)) for x in range(self.q))

    @cached_property
    def _inv_table(self) -> Tuple[int, ...]:
        table = [0] * self.q
        for x in range(1, self.q):
            for y in range(1, self.q):
                if self._mul_table[x][y] == 1:
                    table[x] = y
                    break
        return tuple(table)

    def format_element(self, v: int) -> str:
        """Print an element; extension elements print as polynomials in ``a``"""
        if self.k == 1:
            return str(v)
        parts = []
        for e, c in reversed(list(enumerate(self.digits(v)))):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "a" if e == 1 else f"a^{e}"
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) if parts else "0"

    def __str__(self) -> str:
        if self.k == 1:
            return f"F_{self.p}"
        mod = "+".join(
            ("" if c == 1 and e else str(c)) + ("" if e == 0 else "a" if e == 1 else f"a^{e}")
            for e, c in reversed(list(enumerate(self.modulus)))
            if c
        )
        return f"F_{self.q}[{mod}]"


@dataclass(frozen=True)
class FieldElem:
    spec: FieldSpec
    value: int

    def _check(self, other: "FieldElem") -> None:
        if self.spec != other.spec:
            raise FieldMismatch(f"cannot combine elements of {self.spec} and {other.spec}")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.spec, self.spec.add(self.value, other.value))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.spec, self.spec.sub(self.value, other.value))

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.spec, self.spec.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inverse()

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.neg(self.value))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def coordinates(self) -> Tuple[int, ...]:
        return self.spec.digits(self.value)

    def __str__(self) -> str:
        return self.spec.format_element(self.value)


_OPS = ("add", "mul", "neg", "inv")


def field_arith(x: FieldElem, y: FieldElem = None, op: str = "add") -> FieldElem:
    """Single entry point for field arithmetic; ``y`` is ignored for neg and inv"""
    if op not in _OPS:
        raise ValueError(f"unknown field operation {op!r}")
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if y is None:
        raise ValueError(f"{op} needs two operands")
    return x + y if op == "add" else x * y
