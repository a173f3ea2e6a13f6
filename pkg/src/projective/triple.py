"""
Ordered triples of distinct boundary points
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from src.algebra import FieldSpec
from src.projective.point import ProjPoint
from src.utils.errors import DistinctnessViolated, FieldMismatch


@dataclass(frozen=True)
class Triple:
    w1: ProjPoint
    w2: ProjPoint
    w3: ProjPoint

    def __post_init__(self):
        spec = self.w1.spec
        if self.w2.spec != spec or self.w3.spec != spec:
            raise FieldMismatch("triple mixes points over different fields")
        for i, j in ((1, 2), (1, 3), (2, 3)):
            if self[i - 1] == self[j - 1]:
                raise DistinctnessViolated(i, j)

    @classmethod
    def standard(cls, spec: FieldSpec) -> "Triple":
        """(0, 1, inf)"""
        return cls(ProjPoint.zero(spec), ProjPoint.one(spec), ProjPoint.infinity(spec))

    @property
    def spec(self) -> FieldSpec:
        return self.w1.spec

    def __getitem__(self, i: int) -> ProjPoint:
        return (self.w1, self.w2, self.w3)[i]

    def __iter__(self) -> Iterator[ProjPoint]:
        return iter((self.w1, self.w2, self.w3))

    def points(self) -> Tuple[ProjPoint, ProjPoint, ProjPoint]:
        return self.w1, self.w2, self.w3

    def __str__(self) -> str:
        return f"({self.w1}, {self.w2}, {self.w3})"


def make_triple(w1: ProjPoint, w2: ProjPoint, w3: ProjPoint) -> Triple:
    """Build a triple, raising DistinctnessViolated(i, j) for the first equal pair"""
    return Triple(w1, w2, w3)
