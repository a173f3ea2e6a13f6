"""
Exhaustive finite windows into PGL_2(F_q[t])
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from tqdm import tqdm

from src.algebra import FieldSpec, Poly, all_polys
from src.group import GammaElem
from src.utils.cache import load_from_cache, save_to_cache
from src.utils.errors import BallTooLarge
from src.utils.log import get_logger

logger = get_logger("oracle.gamma_ball")

# raw coefficient tuples scanned: q^(4(D+1)) <= 3^12
BALL_GUARD = 3 ** 12

Coeffs = Tuple[int, ...]
Row = Tuple[Coeffs, Coeffs]


@dataclass(frozen=True)
class GammaBall:
    """Every element of PGL_2(F_q[t]) whose canonical entries have degree <= D"""

    spec: FieldSpec
    degree_bound: int
    elements: Tuple[GammaElem, ...]
    _members: FrozenSet[GammaElem] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GammaElem]:
        return iter(self.elements)

    def __contains__(self, g: GammaElem) -> bool:
        return g in self._members


def ball_fits(spec: FieldSpec, degree_bound: int) -> bool:
    return spec.q ** (4 * (degree_bound + 1)) <= BALL_GUARD


def _first_rows(spec: FieldSpec, degree_bound: int) -> List[Row]:
    """Top rows whose first nonzero entry is monic"""
    rows = []
    for a in all_polys(spec, degree_bound):
        for b in all_polys(spec, degree_bound):
            first = a if not a.is_zero else b
            if not first.is_zero and first.is_monic:
                rows.append((a.coeffs, b.coeffs))
    return rows


def _scan_rows(spec: FieldSpec, degree_bound: int, rows: Sequence[Row]) -> List[Tuple[Coeffs, ...]]:
    """Complete each top row with every bottom row of unit determinant"""
    polys = list(all_polys(spec, degree_bound))
    found = []
    for a_coeffs, b_coeffs in rows:
        a, b = Poly(spec, a_coeffs), Poly(spec, b_coeffs)
        for c in polys:
            bc = b * c
            for d in polys:
                if (a * d - bc).degree == 0:
                    found.append((a.coeffs, b.coeffs, c.coeffs, d.coeffs))
    return found


def _chunks(rows: List[Row], n: int) -> List[List[Row]]:
    size = max(1, -(-len(rows) // n))
    return [rows[i:i + size] for i in range(0, len(rows), size)]


def enumerate_gamma_ball(spec: FieldSpec, degree_bound: int, workers: int = 1,
                         use_cache: bool = True, progress: bool = False) -> GammaBall:
    """
    Enumerate the ball of entry degree <= degree_bound

    Only tuples that are already canonical (first nonzero entry monic, determinant a
    nonzero constant, hence content 1) are kept, so no deduplication is needed.

    Raises:
        BallTooLarge: when q^(4(D+1)) exceeds the guard
    """
    if degree_bound < 0 or not ball_fits(spec, degree_bound):
        raise BallTooLarge(
            f"Gamma-ball with q={spec.q}, D={degree_bound} exceeds {BALL_GUARD} coefficient tuples"
        )
    key = f"{spec.p}^{spec.k}:{','.join(map(str, spec.modulus))}:{degree_bound}"
    cached = load_from_cache("gamma_ball", key) if use_cache else None
    if cached is not None:
        entries = [tuple(tuple(e) for e in entry) for entry in cached]
    else:
        rows = _first_rows(spec, degree_bound)
        chunks = _chunks(rows, max(workers, 1) * 4)
        entries = []
        bar = tqdm(total=len(chunks), desc=f"Gamma-ball D={degree_bound}", disable=not progress)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [executor.submit(_scan_rows, spec, degree_bound, chunk) for chunk in chunks]
                for future in futures:
                    entries.extend(future.result())
                    bar.update(1)
        else:
            for chunk in chunks:
                entries.extend(_scan_rows(spec, degree_bound, chunk))
                bar.update(1)
        bar.close()
        if use_cache:
            save_to_cache("gamma_ball", key, [[list(e) for e in entry] for entry in entries])
    elements = tuple(GammaElem(*(Poly(spec, e) for e in entry)) for entry in entries)
    logger.info("Gamma-ball over %s with D=%d: %d elements", spec, degree_bound, len(elements))
    return GammaBall(spec, degree_bound, elements)


def random_ball_element(ball: GammaBall, rng: random.Random) -> GammaElem:
    return rng.choice(ball.elements)
