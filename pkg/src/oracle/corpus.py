"""
Random triples and the JSON-lines corpus format

Each line is ``{"q": 3, "triple": ["t", "t+1", "t+2"]}``; extension fields also
carry ``"modulus"``.
"""

import json
import random
from typing import IO, Iterable, List

from src.algebra import FieldSpec, Poly
from src.cli.parser import parse_triple
from src.domain import canonical_form
from src.projective import ProjPoint, Triple
from src.utils.errors import ConfigError, DistinctnessViolated, ParseError


def random_poly(spec: FieldSpec, rng: random.Random, max_degree: int) -> Poly:
    return Poly(spec, tuple(rng.randrange(spec.q) for _ in range(max_degree + 1)))


def random_point(spec: FieldSpec, rng: random.Random, max_degree: int,
                 infinity_rate: float = 0.05) -> ProjPoint:
    if rng.random() < infinity_rate:
        return ProjPoint.infinity(spec)
    den = Poly.zero(spec)
    while den.is_zero:
        den = random_poly(spec, rng, max_degree)
    return ProjPoint(random_poly(spec, rng, max_degree), den)


def random_triple(spec: FieldSpec, rng: random.Random, max_degree: int) -> Triple:
    while True:
        points = [random_point(spec, rng, max_degree) for _ in range(3)]
        if len(set(points)) == 3:
            return Triple(*points)


def generate_corpus(spec: FieldSpec, count: int, seed: int = 0, max_degree: int = 4,
                    reduced: bool = False) -> List[Triple]:
    """Deterministic for a given seed"""
    rng = random.Random(seed)
    triples = [random_triple(spec, rng, max_degree) for _ in range(count)]
    if reduced:
        triples = [canonical_form(T) for T in triples]
    return triples


def _field_header(spec: FieldSpec) -> dict:
    header = {"q": spec.q}
    if spec.k > 1:
        header["modulus"] = list(spec.modulus)
    return header


def write_corpus(triples: Iterable[Triple], stream: IO[str]) -> int:
    count = 0
    for T in triples:
        line = dict(_field_header(T.spec), triple=[str(w) for w in T])
        stream.write(json.dumps(line) + "\n")
        count += 1
    return count


def read_corpus(stream: IO[str], spec: FieldSpec) -> List[Triple]:
    """
    Parse a corpus, checking every line against the field of the invocation

    Raises:
        ParseError: on malformed lines
        ConfigError: when a line was written for another field
    """
    expected = _field_header(spec)
    triples = []
    for number, raw in enumerate(stream, start=1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            line = json.loads(raw)
            points = line["triple"]
            field_info = {key: line.get(key) for key in expected}
        except (json.JSONDecodeError, KeyError, TypeError, AttributeError):
            raise ParseError(f"corpus line {number} is not a valid record")
        if field_info != expected:
            raise ConfigError(f"corpus line {number} is over q={line.get('q')}, expected q={spec.q}")
        if not isinstance(points, list) or len(points) != 3 or not all(isinstance(p, str) for p in points):
            raise ParseError(f"corpus line {number} needs exactly three points")
        try:
            triples.append(parse_triple(spec, "(" + ", ".join(points) + ")"))
        except (ParseError, DistinctnessViolated) as e:
            raise ParseError(f"corpus line {number}: {e}")
    return triples

