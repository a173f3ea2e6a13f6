"""
Reduction of a triple to its representative in S by continued-fraction moves

The loop only ever applies iota, u_{-a} and one final sigma_c, so the returned word
is a product of generators of PGL_2(F_q[t]).

    1. move w1 into deg < 0 (iota if w1 = inf, then subtract its polynomial part)
    2. while deg w3 <= 0, push w3 out past deg 0 with u and iota
    3. once deg w1 < 0 < deg w3, fix the middle point: if neither S2 nor S3 holds,
       either w2 is at least as large as w3 (subtract [w3], invert) or w1 and w2
       share their leading term (invert), then start over
    4. normalise the leading coefficient with sigma
"""

from dataclasses import dataclass

from src.domain.membership import membership
from src.group import Generator, GammaElem, Word
from src.projective import Triple, cf_length, point_degree, point_leading, polynomial_part
from src.utils.errors import ReductionDiverged
from src.utils.log import get_logger

logger = get_logger("domain.reduce")


@dataclass(frozen=True)
class ReductionResult:
    gamma: Word
    reduced: Triple
    steps: int

    @property
    def matrix(self) -> GammaElem:
        return self.gamma.matrix

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma.matrix),
            "word": str(self.gamma),
            "reduced": str(self.reduced),
            "steps": self.steps,
        }


class _Reducer:
    def __init__(self, T: Triple):
        self.spec = T.spec
        self.current = T
        self.word = Word.identity(self.spec)
        self.iota = Generator.iota(self.spec)

    def apply(self, token: Generator) -> None:
        self.current = token.act_triple(self.current)
        self.word = self.word.then(token)
        logger.debug("%s -> %s", token, self.current)

    def subtract(self, a) -> None:
        if not a.is_zero:
            self.apply(Generator.u(a, negated=True))


def reduce(T: Triple) -> ReductionResult:
    """Return the word gamma and gamma.T in S"""
    cap = 4 * sum(cf_length(w) for w in T) + 16
    r = _Reducer(T)
    for _ in range(cap):
        if r.current.w1.is_infinity:
            r.apply(r.iota)
        r.subtract(polynomial_part(r.current.w1))

        if point_degree(r.current.w3) <= 0:
            e = polynomial_part(r.current.w3)
            if not e.is_zero:
                r.subtract(e)
                r.apply(r.iota)
            else:
                r.apply(r.iota)
                if r.current.w1.is_infinity:
                    r.subtract(polynomial_part(r.current.w3))
                    r.apply(r.iota)
            continue

        mask = membership(r.current)
        if mask.s1 and (mask.s2 or mask.s3):
            break
        if point_degree(r.current.w2) >= point_degree(r.current.w3):
            r.subtract(polynomial_part(r.current.w3))
        r.apply(r.iota)
    else:
        raise ReductionDiverged(f"no reduced form for {T} within {cap} rounds")

    w1, w2 = r.current.w1, r.current.w2
    lead = point_leading(w2) if not w2.is_zero else point_leading(w1)
    if lead.value != 1:
        r.apply(Generator.sigma(lead.inverse()))
    return ReductionResult(r.word, r.current, len(r.word))


def canonical_form(T: Triple) -> Triple:
    """The representative of the orbit of T in S"""
    return reduce(T).reduced
