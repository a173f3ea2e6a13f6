"""
Brute-force machinery that certifies the main algorithms at small scale
"""

from src.oracle.bruteforce import reduce_bruteforce
from src.oracle.corpus import (
    generate_corpus,
    random_point,
    random_poly,
    random_triple,
    read_corpus,
    write_corpus,
)
from src.oracle.gamma_ball import (
    BALL_GUARD,
    GammaBall,
    ball_fits,
    enumerate_gamma_ball,
    random_ball_element,
)
from src.oracle.tree_ball import TreeBall, bfs_ball, bfs_distance

__all__ = [
    "GammaBall",
    "BALL_GUARD",
    "ball_fits",
    "enumerate_gamma_ball",
    "random_ball_element",
    "TreeBall",
    "bfs_ball",
    "bfs_distance",
    "reduce_bruteforce",
    "random_poly",
    "random_point",
    "random_triple",
    "generate_corpus",
    "read_corpus",
    "write_corpus",
]
