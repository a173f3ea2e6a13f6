"""
Generator tokens iota, sigma_c, u_f and words in them
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from src.algebra import FieldElem, FieldSpec, Poly
from src.group.matrix import GammaElem, compose
from src.projective import ProjPoint, Triple
from src.utils.errors import InvalidGenerator

IOTA = "iota"
SIGMA = "sigma"
U = "u"


@dataclass(frozen=True)
class Generator:
    """
    One generator of PGL_2(F_q[t])

    ``u`` tokens may be recorded in subtracting form (``negated``): the token then
    stands for u_{-f} and prints as ``u:-f``.
    """

    spec: FieldSpec
    kind: str
    arg: Union[None, FieldElem, Poly] = None
    negated: bool = False

    def __post_init__(self):
        if self.kind == IOTA:
            if self.arg is not None:
                raise InvalidGenerator("iota takes no argument")
        elif self.kind == SIGMA:
            if not isinstance(self.arg, FieldElem):
                raise InvalidGenerator("sigma takes a field element")
            if not self.arg:
                raise InvalidGenerator("sigma_c needs c != 0")
        elif self.kind == U:
            if not isinstance(self.arg, Poly):
                raise InvalidGenerator("u takes a polynomial")
        else:
            raise InvalidGenerator(f"unknown generator {self.kind!r}")

    @classmethod
    def iota(cls, spec: FieldSpec) -> "Generator":
        return cls(spec, IOTA)

    @classmethod
    def sigma(cls, c: FieldElem) -> "Generator":
        return cls(c.spec, SIGMA, c)

    @classmethod
    def u(cls, f: Poly, negated: bool = False) -> "Generator":
        return cls(f.spec, U, f, negated)

    @property
    def shift(self) -> Optional[Poly]:
        """The polynomial actually added by a u token"""
        if self.kind != U:
            return None
        return -self.arg if self.negated else self.arg

    def matrix(self) -> GammaElem:
        spec = self.spec
        one, zero = Poly.one(spec), Poly.zero(spec)
        if self.kind == IOTA:
            return GammaElem(zero, one, one, zero)
        if self.kind == SIGMA:
            return GammaElem(Poly.constant(spec, self.arg), zero, zero, one)
        return GammaElem(one, self.shift, zero, one)

    def act_point(self, w: ProjPoint) -> ProjPoint:
        if self.kind == IOTA:
            return w.reciprocal()
        if self.kind == SIGMA:
            return w.scale(self.arg)
        return w.translate(self.shift)

    def act_triple(self, T: Triple) -> Triple:
        return Triple(*(self.act_point(w) for w in T))

    def __str__(self) -> str:
        if self.kind == IOTA:
            return IOTA
        if self.kind == SIGMA:
            return f"{SIGMA}:{self.arg}"
        return f"{U}:{'-' if self.negated else ''}{self.arg}"


def generator(token: Generator) -> GammaElem:
    """Canonical matrix of a generator token"""
    return token.matrix()


@dataclass(frozen=True)
class Word:
    """
    Product tok_0 * tok_1 * ... * tok_n of generators with its cached matrix

    Acting on a triple applies tok_n first, so the printed word reads like the
    composition it denotes.
    """

    spec: FieldSpec
    tokens: Tuple[Generator, ...] = ()
    matrix: GammaElem = field(default=None, compare=False)

    def __post_init__(self):
        if self.matrix is None:
            product = GammaElem.identity(self.spec)
            for tok in reversed(self.tokens):
                product = compose(tok.matrix(), product)
            object.__setattr__(self, "matrix", product)

    @classmethod
    def identity(cls, spec: FieldSpec) -> "Word":
        return cls(spec)

    def then(self, token: Generator) -> "Word":
        """The word that applies ``token`` after this one"""
        return Word(self.spec, (token,) + self.tokens, compose(token.matrix(), self.matrix))

    def act_triple(self, T: Triple) -> Triple:
        for tok in reversed(self.tokens):
            T = tok.act_triple(T)
        return T

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return ".".join(str(tok) for tok in self.tokens) if self.tokens else "id"
