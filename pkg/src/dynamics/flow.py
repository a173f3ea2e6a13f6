"""
Right translation by h = diag(t, 1) in triple coordinates, and its version on S
"""

from dataclasses import dataclass
from typing import List

from src.domain import membership, reduce
from src.group import Word, compose, h_matrix, phi, phi_inverse
from src.projective import ProjPoint, Triple
from src.tree import tripod_center
from src.utils.errors import InvalidStepCount, NotInDomain
from src.utils.log import get_logger

logger = get_logger("dynamics")


def varphi_h(T: Triple, power: int = 1) -> Triple:
    """
    Phi(Phi^-1(T) h^power), computed with the matrices

    Only the middle point moves. power = -1 runs the flow backwards.
    """
    if power == 0:
        raise InvalidStepCount("the flow needs a nonzero power of h")
    return phi(compose(phi_inverse(T), h_matrix(T.spec, power)))


def varphi_h_formula(T: Triple) -> Triple:
    """
    The closed formula for the new middle point

    Generic case ((w2-w1) w3 t + (w3-w2) w1) / ((w2-w1) t + w3 - w2), with its
    limits when one of the points is inf; w3 = inf is the c = 0 branch
    (w2 - w1) t + w1.
    """
    spec = T.spec
    w1, w2, w3 = T
    t = ProjPoint.t_power(spec, 1)
    one = ProjPoint.one(spec)
    if w3.is_infinity:
        new = (w2 - w1) * t + w1
    elif w1.is_infinity:
        new = w3 - (w3 - w2) / t
    elif w2.is_infinity:
        new = (t * w3 - w1) / (t - one)
    else:
        new = ((w2 - w1) * w3 * t + (w3 - w2) * w1) / ((w2 - w1) * t + w3 - w2)
    return Triple(w1, new, w3)


@dataclass(frozen=True)
class FlowStep:
    pre: Triple
    post_raw: Triple
    post_reduced: Triple
    gamma: Word
    height: int

    def to_dict(self) -> dict:
        return {
            "pre": str(self.pre),
            "post_raw": str(self.post_raw),
            "post_reduced": str(self.post_reduced),
            "gamma": str(self.gamma),
            "height": self.height,
        }


def psi_h(T: Triple, power: int = 1) -> FlowStep:
    """One step of the flow read back in S"""
    if not membership(T).in_S:
        raise NotInDomain(f"{T} is not in the fundamental domain; reduce it first")
    raw = varphi_h(T, power)
    result = reduce(raw)
    height = abs(tripod_center(result.reduced).level)
    return FlowStep(T, raw, result.reduced, result.gamma, height)


def flow_orbit(T: Triple, steps: int, power: int = 1) -> List[FlowStep]:
    if steps < 1:
        raise InvalidStepCount(f"steps must be at least 1, got {steps}")
    orbit = []
    current = T
    for _ in range(steps):
        step = psi_h(current, power)
        logger.debug("%s -> %s (height %d)", step.pre, step.post_reduced, step.height)
        orbit.append(step)
        current = step.post_reduced
    return orbit
