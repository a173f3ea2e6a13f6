"""
The strong fundamental domain S and reduction into it
"""

from src.domain.equivalence import orbit_equivalent
from src.domain.membership import MembershipMask, membership
from src.domain.reduction import ReductionResult, canonical_form, reduce

__all__ = [
    "MembershipMask",
    "membership",
    "ReductionResult",
    "reduce",
    "canonical_form",
    "orbit_equivalent",
]
