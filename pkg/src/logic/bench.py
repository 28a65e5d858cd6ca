"""Benchmark corpora against the brute-force oracle.

Every instance runs the quantum pipeline (``random`` family) or the step-4
Grover search alone (``planted`` family) next to the classical check, and
yields one CSV row with the columns in :data:`CSV_COLUMNS`.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd

from src import config
from src.errors import ArityTooLargeError, DualityError
from src.logic.classical import is_self_dual_brute
from src.logic.corpus import planted_violation, random_antichain
from src.logic.dnf import build_violation_oracle, dnf_oracle
from src.logic.pipeline import cross_validate, quantum_self_dual
from src.logic.rng import derive_seed, make_rng
from src.logic.subroutines import SimConfig, default_counting_width, grover_search_report

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "n",
    "instance_id",
    "seed",
    "quantum_answer",
    "classical_answer",
    "dj_queries",
    "counting_queries",
    "grover_queries",
    "agree",
]

FAMILIES = ("random", "planted")

# Mean Grover queries per instance must stay under GROVER_QUERY_FACTOR * 2**(n/2).
GROVER_QUERY_FACTOR = 9


@dataclass(frozen=True)
class BenchTask:
    n: int
    instance_id: int
    seed: int
    family: str


def _run_random(task: BenchTask) -> dict:
    f = random_antichain(task.n, make_rng(task.seed))
    trace = quantum_self_dual(f, SimConfig(seed=derive_seed(task.seed, 1)))
    check = cross_validate(f, None, trace)
    queries = trace.queries
    return {
        "quantum_answer": trace.final.answer,
        "classical_answer": check.classical_answer,
        "dj_queries": queries["dj"],
        "counting_queries": queries["counting"],
        "grover_queries": queries["grover"] + queries["classical"],
        "agree": check.agree,
    }


def _run_planted(task: BenchTask) -> dict:
    f = planted_violation(task.n, make_rng(task.seed))
    predicate = build_violation_oracle(f)
    rng = make_rng(derive_seed(task.seed, 1))
    report = grover_search_report(predicate, task.n, SimConfig(), rng)
    quantum_answer = report.witness is None
    classical_answer = is_self_dual_brute(dnf_oracle(f)).answer
    return {
        "quantum_answer": quantum_answer,
        "classical_answer": classical_answer,
        "dj_queries": 0,
        "counting_queries": 0,
        "grover_queries": report.queries,
        "agree": quantum_answer == classical_answer,
    }


def run_task(task: BenchTask) -> dict:
    runner = _run_planted if task.family == "planted" else _run_random
    row = {"n": task.n, "instance_id": task.instance_id, "seed": task.seed}
    row.update(runner(task))
    return row


def plan_tasks(
    n_min: int, n_max: int, instances: int, seed: int, family: str = "random"
) -> List[BenchTask]:
    """Validate the requested range and derive one seed per instance."""
    if family not in FAMILIES:
        raise DualityError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if n_min > n_max or instances < 1:
        raise DualityError(f"empty benchmark range n={n_min}..{n_max} x {instances}")
    lowest = 3 if family == "planted" else 2
    if n_min < lowest:
        raise DualityError(f"{family} instances need n >= {lowest}")
    if n_max > config.CLASSICAL_ARITY_CAP:
        raise ArityTooLargeError(
            f"n={n_max} exceeds classical cap {config.CLASSICAL_ARITY_CAP}"
        )
    # random instances also hold the counting register
    qubits = n_max if family == "planted" else n_max + default_counting_width(n_max)
    if qubits > config.MAX_QUBITS:
        raise ArityTooLargeError(
            f"n={n_max} needs {qubits} qubits, above the cap of {config.MAX_QUBITS}"
        )
    tasks = []
    index = 0
    for n in range(n_min, n_max + 1):
        for instance_id in range(instances):
            tasks.append(BenchTask(n, instance_id, derive_seed(seed, index), family))
            index += 1
    return tasks


def run_bench(
    n_min: int,
    n_max: int,
    instances: int,
    seed: int,
    family: str = "random",
    workers: Optional[int] = None,
) -> pd.DataFrame:
    """Run every instance and return rows in deterministic instance order."""
    tasks = plan_tasks(n_min, n_max, instances, seed, family)
    workers = workers or config.BENCH_WORKERS
    logger.info(
        "Bench %s n=%d..%d, %d instances each, seed %d, %d workers",
        family, n_min, n_max, instances, seed, workers,
    )
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(run_task, tasks))
    df = pd.DataFrame(rows, columns=CSV_COLUMNS)
    disagreements = int((~df["agree"]).sum())
    if disagreements:
        logger.warning("%d instances disagree with the brute-force oracle", disagreements)
    return df


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    """Per-n mean Grover queries next to the ``9 * 2**(n/2)`` reference."""
    grouped = df.groupby("n")
    summary = pd.DataFrame(
        {
            "instances": grouped.size(),
            "mean_grover_queries": grouped["grover_queries"].mean(),
            "agreement_rate": grouped["agree"].mean(),
        }
    )
    summary["query_bound"] = [
        GROVER_QUERY_FACTOR * math.sqrt(2 ** n) for n in summary.index
    ]
    summary["within_bound"] = summary["mean_grover_queries"] <= summary["query_bound"]
    return summary.reset_index()


def write_csv(df: pd.DataFrame, path: Union[str, Path]) -> None:
    df.to_csv(path, index=False)
    logger.info("Wrote %d bench rows to %s", len(df), path)
