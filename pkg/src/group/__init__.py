"""
PGL_2 over F_q[t]: canonical matrices, generators, words and the Moebius action
"""

from src.group.action import act_point, act_triple, phi, phi_inverse, standard_triple
from src.group.matrix import GammaElem, compose, h_matrix, inverse
from src.group.word import IOTA, SIGMA, U, Generator, Word, generator

__all__ = [
    "GammaElem",
    "compose",
    "inverse",
    "h_matrix",
    "Generator",
    "Word",
    "generator",
    "IOTA",
    "SIGMA",
    "U",
    "act_point",
    "act_triple",
    "phi",
    "phi_inverse",
    "standard_triple",
]
