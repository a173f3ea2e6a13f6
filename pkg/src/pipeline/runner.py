"""
Corpus verification runner: re-checks the reduction invariants over a batch of triples
"""

import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from rich.markup import escape
from rich.panel import Panel
from tqdm import tqdm

from src.algebra import FieldSpec
from src.domain import canonical_form, membership, reduce
from src.group import GammaElem, act_triple
from src.oracle import ball_fits, enumerate_gamma_ball, random_ball_element, read_corpus
from src.projective import Triple
from src.utils.errors import FqtError
from src.utils.formatting import get_formatted_duration, get_formatted_time
from src.utils.log import console, get_logger

logger = get_logger("pipeline")

Job = Tuple[int, Triple, Tuple[GammaElem, ...]]


def check_triple(T: Triple) -> List[str]:
    """Soundness of reduce on one triple; returns the list of violated properties"""
    try:
        result = reduce(T)
    except FqtError as e:
        return [f"reduce failed: {e}"]
    problems = []
    if not result.matrix.in_gamma:
        problems.append(f"gamma {result.matrix} has non-unit determinant {result.matrix.det()}")
    if act_triple(result.matrix, T) != result.reduced:
        problems.append("gamma does not carry the input to the reduced triple")
    if not membership(result.reduced).in_S:
        problems.append(f"reduced triple {result.reduced} is not in S")
    elif reduce(result.reduced).reduced != result.reduced:
        problems.append("reduce is not idempotent on its own output")
    return problems


def check_canonicality(T: Triple, gammas: Sequence[GammaElem]) -> List[str]:
    """reduce(g.T) must agree with reduce(T) for every sampled g"""
    reference = canonical_form(T)
    return [
        f"canonical form changes under {g}"
        for g in gammas
        if canonical_form(act_triple(g, T)) != reference
    ]


def _verify(job: Job) -> Tuple[int, List[str]]:
    index, T, gammas = job
    problems = check_triple(T)
    if gammas and not problems:
        problems.extend(check_canonicality(T, gammas))
    return index, problems


def _largest_ball_degree(spec: FieldSpec, limit: int = 2) -> Optional[int]:
    for D in range(limit, -1, -1):
        if ball_fits(spec, D):
            return D
    return None


def run_corpus_verification(
    spec: FieldSpec,
    corpus_file: str = "-",
    workers: int = 1,
    canonicality: int = 0,
    seed: int = 0,
    report_file: Optional[str] = None,
    verbose: bool = False,
    progress: bool = False,
) -> Dict:
    """
    Verify every triple of a JSON-lines corpus

    Args:
        spec: field of the invocation; every corpus line must match it
        corpus_file: path to the corpus, or ``-`` for stdin
        workers: process count for the per-line checks
        canonicality: number of random Gamma-ball elements tried per line (0 = skip)
        seed: seed for the Gamma-ball sampling
        report_file: optional path for the markdown process log
        verbose: print every failing line
        progress: show tqdm bars

    Returns:
        Summary dict with totals and the failing lines
    """
    run_start = time.time()
    steps_log = [
        f"# Corpus verification over {spec}",
        f"*Generated on: {get_formatted_time()}*",
        "\n## Process Overview",
        "1. **Load**: parse the corpus and check its field",
        "2. **Soundness**: reduce every triple and check the result",
        "3. **Canonicality**: compare canonical forms across random group elements",
        "4. **Summary**",
        "\n## Detailed Process Log\n",
    ]

    def save_log() -> None:
        if report_file:
            with open(report_file, "w") as f:
                f.write("\n".join(steps_log))
            console.print(f"[bold green]Process log saved to: {report_file}[/]")

    try:
        # STEP 1: Load
        console.print(Panel(f"[bold blue]STEP 1/4: Loading corpus {corpus_file}[/]", expand=False), style="blue")
        step_start = time.time()
        steps_log.append("### STEP 1: Load")
        steps_log.append(f"- **Source**: {corpus_file}")
        steps_log.append(f"- **Started**: {get_formatted_time()}")
        if corpus_file == "-":
            triples = read_corpus(sys.stdin, spec)
        else:
            with open(corpus_file, "r") as f:
                triples = read_corpus(f, spec)
        duration = time.time() - step_start
        steps_log.append(f"- **Triples**: {len(triples)}")
        steps_log.append(f"- **Duration**: {get_formatted_duration(duration)}\n")
        console.print(f"[dim]{len(triples)} triples loaded in {get_formatted_duration(duration)}[/]\n")

        # STEP 3 is folded into the same worker jobs as STEP 2, so sample first
        ball_degree = None
        samples: List[Tuple[GammaElem, ...]] = [() for _ in triples]
        if canonicality > 0:
            ball_degree = _largest_ball_degree(spec)
            if ball_degree is None:
                console.print(f"[yellow]No Gamma-ball fits the guard for q={spec.q}; skipping canonicality[/]")
            else:
                ball = enumerate_gamma_ball(spec, ball_degree, workers=workers, progress=progress)
                rng = random.Random(seed)
                samples = [
                    tuple(random_ball_element(ball, rng) for _ in range(canonicality)) for _ in triples
                ]

        # STEP 2: Soundness (and canonicality)
        console.print(Panel("[bold green]STEP 2/4: Soundness[/]", expand=False), style="green")
        step_start = time.time()
        steps_log.append("### STEP 2: Soundness")
        steps_log.append("- **Checks**: unit determinant, gamma.T = reduced, reduced in S, idempotence")
        steps_log.append(f"- **Workers**: {workers}")
        steps_log.append(f"- **Started**: {get_formatted_time()}")
        jobs = [(i, T, samples[i]) for i, T in enumerate(triples)]
        outcomes: Dict[int, List[str]] = {}
        bar = tqdm(total=len(jobs), desc="verifying", disable=not progress)
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                for index, problems in executor.map(_verify, jobs, chunksize=max(1, len(jobs) // (workers * 8))):
                    outcomes[index] = problems
                    bar.update(1)
        else:
            for job in jobs:
                index, problems = _verify(job)
                outcomes[index] = problems
                bar.update(1)
        bar.close()
        duration = time.time() - step_start
        steps_log.append(f"- **Duration**: {get_formatted_duration(duration)}\n")

        # STEP 3: Canonicality
        console.print(Panel("[bold yellow]STEP 3/4: Canonicality[/]", expand=False), style="yellow")
        steps_log.append("### STEP 3: Canonicality")
        if ball_degree is None:
            steps_log.append("- **Skipped**\n")
            console.print("[dim]skipped[/]\n")
        else:
            steps_log.append(f"- **Samples per triple**: {canonicality} from the ball of degree {ball_degree}\n")
            console.print(f"[dim]{canonicality} samples per triple, ball degree {ball_degree}[/]\n")

        # STEP 4: Summary
        console.print(Panel("[bold red]STEP 4/4: Summary[/]", expand=False), style="red")
        failures = [
            {"line": i + 1, "triple": str(triples[i]), "problems": outcomes[i]}
            for i in range(len(triples))
            if outcomes[i]
        ]
        summary = {
            "field": str(spec),
            "total": len(triples),
            "passed": len(triples) - len(failures),
            "failed": len(failures),
            "canonicality": canonicality if ball_degree is not None else 0,
            "ball_degree": ball_degree,
            "failures": failures,
        }
        total_duration = time.time() - run_start
        steps_log.append("### STEP 4: Summary")
        steps_log.append(f"- **Passed**: {summary['passed']} / {summary['total']}")
        steps_log.append(f"- **Failed**: {summary['failed']}")
        for failure in failures:
            steps_log.append(f"  - line {failure['line']} {failure['triple']}: {'; '.join(failure['problems'])}")
        steps_log.append(f"- **Total duration**: {get_formatted_duration(total_duration)}")

        colour = "green" if not failures else "red"
        console.print(f"[bold {colour}]{summary['passed']} / {summary['total']} triples passed[/]")
        if verbose:
            for failure in failures:
                console.print(f"[red]line {failure['line']}[/] {escape(failure['triple'])}: {escape('; '.join(failure['problems']))}")
        logger.info("corpus verified: %d passed, %d failed", summary["passed"], summary["failed"])
        save_log()
        return summary

    except Exception as e:
        console.print(f"[bold red]Error during corpus verification: {escape(str(e))}[/]")
        steps_log.append(f"\n### ERROR: {str(e)}")
        try:
            save_log()
        except OSError:
            pass
        raise
