"""
Search-based reduction: every element of a Gamma-ball that moves a triple into S
"""

from typing import List, Tuple

from src.domain import membership
from src.group import GammaElem, act_triple
from src.oracle.gamma_ball import GammaBall
from src.projective import Triple


def reduce_bruteforce(T: Triple, ball: GammaBall) -> List[Tuple[GammaElem, Triple]]:
    hits = []
    for g in ball:
        image = act_triple(g, T)
        if membership(image).in_S:
            hits.append((g, image))
    return hits
