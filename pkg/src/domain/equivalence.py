"""
Deciding whether two triples lie in the same orbit
"""

from typing import Optional

from src.domain.reduction import reduce
from src.group import GammaElem, act_triple, compose, inverse
from src.projective import Triple
from src.utils.errors import VerificationFailed


def orbit_equivalent(T1: Triple, T2: Triple) -> Optional[GammaElem]:
    """
    gamma with gamma.T1 = T2, or None when the orbits differ

    Both triples are reduced; since S meets each orbit once, the orbits agree iff
    the representatives do, and then gamma = g2^-1 g1.
    """
    r1, r2 = reduce(T1), reduce(T2)
    if r1.reduced != r2.reduced:
        return None
    gamma = compose(inverse(r2.matrix), r1.matrix)
    if act_triple(gamma, T1) != T2:
        raise VerificationFailed(f"{gamma} does not carry {T1} to {T2}")
    return gamma
