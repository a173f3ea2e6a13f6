"""
Membership in the strong fundamental domain S = S0 & S1 & (S2 | S3)
"""

from dataclasses import dataclass

from src.projective import Triple, diff_degree, point_degree, point_leading


@dataclass(frozen=True)
class MembershipMask:
    s0: bool
    s1: bool
    s2: bool
    s3: bool

    @property
    def in_S(self) -> bool:
        return self.s0 and self.s1 and (self.s2 or self.s3)

    def flags(self) -> list:
        return [name for name in ("s0", "s1", "s2", "s3") if getattr(self, name)]

    def to_dict(self) -> dict:
        return {"s0": self.s0, "s1": self.s1, "s2": self.s2, "s3": self.s3, "in_S": self.in_S}


def _normalised(T: Triple) -> bool:
    w1, w2 = T.w1, T.w2
    if w2.is_infinity:
        return False
    if not w2.is_zero:
        return point_leading(w2).value == 1
    # middle point 0: the leading coefficient of w1 carries the scaling instead
    if w1.is_zero or w1.is_infinity:
        return False
    return point_leading(w1).value == 1


def membership(T: Triple) -> MembershipMask:
    d1, d2, d3 = (point_degree(w) for w in T)
    s1 = d1 < 0 < d3
    s2 = d1 != d2 and d2 < d3
    s3 = (
        not T.w1.is_infinity
        and not T.w2.is_infinity
        and d1 == d2 == diff_degree(T.w1, T.w2)
    )
    return MembershipMask(_normalised(T), s1, s2, s3)
