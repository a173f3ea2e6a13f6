"""
Subcommand dispatch for the fqt-domain command line

Results go to stdout as text, compact JSON or DOT; status and errors go to the
shared stderr console. Exit codes: 0 success, 1 domain error, 2 parse/config error.
"""

import argparse
import io
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Sequence

from rich.markup import escape

from src.algebra import FieldSpec
from src.cli.parser import (
    parse_cf,
    parse_field,
    parse_matrix,
    parse_point,
    parse_triple,
    parse_vertex,
    parse_word,
)
from src.domain import membership, orbit_equivalent, reduce
from src.dynamics import flow_orbit
from src.group import act_point, act_triple
from src.oracle import bfs_ball, generate_corpus, write_corpus
from src.pipeline import run_corpus_verification
from src.projective import cf_assemble, cf_expand, point_degree
from src.tree import theta, to_dot, tree_path, tripod_center, vertex_class
from src.utils.cache import clear_cache
from src.utils.config import Settings, load_settings
from src.utils.errors import ConfigError, FqtError
from src.utils.formatting import format_degree, format_flag
from src.utils.log import configure_logging, console, get_logger

logger = get_logger("cli")


@dataclass
class Result:
    text: str
    data: Any = None
    dot: Optional[str] = None
    code: int = 0


def _cf(spec: FieldSpec, args) -> Result:
    if args.value.strip().startswith("["):
        cf = parse_cf(spec, args.value)
        point = cf_assemble(cf)
        return Result(str(point), {"cf": str(cf), "point": str(point)})
    point = parse_point(spec, args.value)
    cf = cf_expand(point)
    return Result(str(cf), {
        "point": str(point),
        "cf": str(cf),
        "quotients": [str(a) for a in cf.quotients],
        "degree": format_degree(point_degree(point)),
    })


def _reduce(spec: FieldSpec, args) -> Result:
    result = reduce(parse_triple(spec, args.triple))
    data = result.to_dict()
    text = "\n".join(f"{key}: {value}" for key, value in data.items())
    return Result(text, data)


def _orbit_eq(spec: FieldSpec, args) -> Result:
    gamma = orbit_equivalent(parse_triple(spec, args.first), parse_triple(spec, args.second))
    if gamma is None:
        return Result("not equivalent", {"equivalent": False, "gamma": None})
    return Result(str(gamma), {"equivalent": True, "gamma": str(gamma)})


def _act(spec: FieldSpec, args) -> Result:
    element = args.element.strip()
    g = parse_matrix(spec, element) if element.startswith("[") else parse_word(spec, element).matrix
    if "," in args.target:
        image = act_triple(g, parse_triple(spec, args.target))
    else:
        image = act_point(g, parse_point(spec, args.target))
    return Result(str(image), {"gamma": str(g), "result": str(image)})


def _membership(spec: FieldSpec, args) -> Result:
    mask = membership(parse_triple(spec, args.triple))
    data = mask.to_dict()
    return Result(" ".join(f"{key}={format_flag(value)}" for key, value in data.items()), data)


def _tree_neighbors(spec: FieldSpec, args) -> Result:
    if args.radius < 1:
        raise ConfigError("--radius must be at least 1")
    center = parse_vertex(spec, args.vertex)
    ball = bfs_ball(center, args.radius)
    others = [str(v) for v in ball.order[1:]]
    return Result(
        ", ".join(others),
        {"center": str(center), "radius": args.radius, "vertices": others},
        to_dot(ball.order, name="ball", highlight=[center]),
    )


def _tree_center(spec: FieldSpec, args) -> Result:
    T = parse_triple(spec, args.triple)
    center = tripod_center(T)
    segment = theta(T).segment(-3, 3)
    return Result(
        str(center),
        {"center": str(center), "level": center.level},
        to_dot(segment, name="geodesic", highlight=[center], title=str(T)),
    )


def _parse_span(text: str):
    try:
        a, b = text.split(":")
        return int(a), int(b)
    except ValueError:
        raise ConfigError(f"--span expects a:b with integers, got {text!r}")


def _tree_path(spec: FieldSpec, args) -> Result:
    if args.span:
        a, b = _parse_span(args.span)
        path = theta(parse_triple(spec, args.start)).segment(a, b)
    else:
        if args.end is None:
            raise ConfigError("tree-path needs two vertices, or a triple with --span a:b")
        path = tree_path(parse_vertex(spec, args.start), parse_vertex(spec, args.end))
    names = [str(v) for v in path]
    return Result(
        ", ".join(names),
        {"path": names, "length": len(path) - 1},
        to_dot(path, name="path", highlight=[path[0], path[-1]]),
    )


def _tree_class(spec: FieldSpec, args) -> Result:
    v = parse_vertex(spec, args.vertex)
    i = vertex_class(v)
    return Result(str(i), {"vertex": str(v), "class": i})


def _flow(spec: FieldSpec, args) -> Result:
    T = parse_triple(spec, args.triple)
    orbit = flow_orbit(T, args.steps, -1 if args.inverse else 1)
    lines = [f"{k}: {step.post_reduced} (height {step.height})" for k, step in enumerate(orbit, start=1)]
    return Result("\n".join(lines), [step.to_dict() for step in orbit])


def _gen_corpus(spec: FieldSpec, args) -> Result:
    if args.count < 0 or args.max_degree < 0:
        raise ConfigError("--count and --max-degree must be non-negative")
    triples = generate_corpus(spec, args.count, args.seed, args.max_degree, args.reduced)
    if args.output:
        with open(args.output, "w") as f:
            n = write_corpus(triples, f)
        console.print(f"[bold green]{n} triples written to {args.output}[/]")
        return Result("", {"count": n, "output": args.output})
    buffer = io.StringIO()
    write_corpus(triples, buffer)
    return Result(buffer.getvalue().rstrip("\n"))


def _verify_corpus(spec: FieldSpec, args) -> Result:
    summary = run_corpus_verification(
        spec,
        args.corpus,
        workers=args.workers,
        canonicality=args.canonicality,
        seed=args.seed,
        report_file=args.report,
        verbose=args.verbose,
        progress=True,
    )
    text = f"{summary['passed']}/{summary['total']} passed, {summary['failed']} failed"
    return Result(text, summary, code=0 if summary["failed"] == 0 else 1)


HANDLERS: Dict[str, Callable[[FieldSpec, Any], Result]] = {
    "cf": _cf,
    "reduce": _reduce,
    "orbit-eq": _orbit_eq,
    "act": _act,
    "membership": _membership,
    "tree-neighbors": _tree_neighbors,
    "tree-center": _tree_center,
    "tree-path": _tree_path,
    "tree-class": _tree_class,
    "flow": _flow,
    "gen-corpus": _gen_corpus,
    "verify-corpus": _verify_corpus,
}


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqt-domain",
        description="Canonical forms of PGL_2(F_q[t])-orbits of boundary triples of the Bruhat-Tits tree",
    )
    parser.add_argument("--q", default=settings.q, help="field size p or p^k (default: FQT_Q or 2)")
    parser.add_argument("--modulus", default=settings.modulus or None,
                        help="irreducible polynomial in a defining F_q when q = p^k, k > 1")
    parser.add_argument("--seed", type=int, default=settings.seed, help="random seed (default: FQT_SEED or 0)")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="Verbose mode: debug logging and per-line failure details")
    parser.add_argument("--clear-cache", action="store_true", help="Clear the Gamma-ball cache before running")

    text_json = argparse.ArgumentParser(add_help=False)
    text_json.add_argument("--format", choices=["text", "json"], default="text")
    with_dot = argparse.ArgumentParser(add_help=False)
    with_dot.add_argument("--format", choices=["text", "json", "dot"], default="text")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("cf", parents=[text_json], help="continued fraction of a point, or evaluate [a0; a1, ...]")
    p.add_argument("value")

    p = sub.add_parser("reduce", parents=[text_json], help="reduce a triple into the fundamental domain")
    p.add_argument("triple")

    p = sub.add_parser("orbit-eq", parents=[text_json], help="find gamma with gamma.T1 = T2")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("act", parents=[text_json], help="act by a matrix or word on a point or triple")
    p.add_argument("element", help="matrix [[a,b],[c,d]] or word such as iota.u:t")
    p.add_argument("target")

    p = sub.add_parser("membership", parents=[text_json], help="evaluate the predicates S0-S3")
    p.add_argument("triple")

    p = sub.add_parser("tree-neighbors", parents=[with_dot], help="neighbours (or a ball) of a vertex")
    p.add_argument("vertex")
    p.add_argument("--radius", type=int, default=1)

    p = sub.add_parser("tree-center", parents=[with_dot], help="tripod center of a triple")
    p.add_argument("triple")

    p = sub.add_parser("tree-path", parents=[with_dot], help="path between vertices, or a segment of a geodesic")
    p.add_argument("start", help="vertex, or triple when --span is given")
    p.add_argument("end", nargs="?")
    p.add_argument("--span", help="index range a:b along the geodesic of a triple (use --span=-2:2)")

    p = sub.add_parser("tree-class", parents=[text_json], help="orbit class i of a vertex (v ~ x_i)")
    p.add_argument("vertex")

    p = sub.add_parser("flow", parents=[text_json], help="iterate the flow on a reduced triple")
    p.add_argument("triple")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--inverse", action="store_true", help="run the flow backwards")

    p = sub.add_parser("gen-corpus", help="write a random corpus as JSON lines")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--reduced", action="store_true", help="store reduced triples")
    p.add_argument("--output", "-o", help="output file (default: stdout)")

    p = sub.add_parser("verify-corpus", parents=[text_json], help="re-check reduction over a corpus")
    p.add_argument("corpus", help="corpus file, or - for stdin")
    p.add_argument("--workers", type=int, default=settings.workers)
    p.add_argument("--canonicality", type=int, default=0, help="random Gamma-ball elements per line")
    p.add_argument("--report", help="write the markdown process log here")
    return parser


def _emit(text: str) -> None:
    if text:
        sys.stdout.write(text + "\n")


def _fail(error: FqtError, fmt: str) -> int:
    if fmt == "json":
        _emit(json.dumps({"error": error.to_dict()}, separators=(",", ":")))
    else:
        console.print(f"[bold red]error[/] ({error.code}): {escape(str(error))}")
    return error.exit_code


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run one subcommand and return the exit code"""
    try:
        settings = load_settings()
    except ConfigError as e:
        return _fail(e, "text")
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging("DEBUG" if args.verbose else settings.log_level)
    fmt = getattr(args, "format", "text")
    try:
        if args.clear_cache:
            count = clear_cache()
            console.print(f"Cache cleared: {count} files removed")
        spec = parse_field(args.q, args.modulus)
        logger.debug("%s over %s", args.command, spec)
        result = HANDLERS[args.command](spec, args)
    except FqtError as e:
        return _fail(e, fmt)
    except OSError as e:
        return _fail(ConfigError(str(e)), fmt)

    if fmt == "json":
        _emit(json.dumps(result.data, separators=(",", ":")))
    elif fmt == "dot":
        _emit(result.dot.rstrip("\n") if result.dot else "")
    else:
        _emit(result.text)
    return result.code
