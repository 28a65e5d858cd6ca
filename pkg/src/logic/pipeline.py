"""Quantum self-duality and dual-pair decision with a per-step trace.

Self-duality runs five steps in order:

1. Deutsch-Jozsa on ``f``; ``z = 0`` means f is not balanced.
2. Deutsch-Jozsa on ``h(x) = f(x) XOR (1 - f(~x))``; ``z != 0`` means h is not 0.
3. Quantum counting on ``f``; the outcome must encode ``2**(n-1)`` solutions.
4. Grover search for ``x`` with ``f(x) = f(~x)``; a verified hit is a witness.
5. Accept.

Rejections are always sound. Acceptance can be wrong only when step 4
misses every existing witness (one-sided error).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src import config
from src.errors import (
    ArityMismatchError,
    ArityTooLargeError,
    ConstantFunctionError,
    DualityError,
    NotAntichainError,
)
from src.logic.classical import is_dual_pair_brute, is_self_dual_brute
from src.logic.dnf import (
    BooleanOracle,
    MonotoneDNF,
    Reason,
    Verdict,
    build_h_oracle,
    build_violation_oracle,
    complement_index,
    dnf_oracle,
    implicant_mask,
    intersection_condition,
    is_prime_antichain,
    self_dual_reduction,
)
from src.logic.rng import make_rng
from src.logic.subroutines import (
    SimConfig,
    accepted_counting_outcomes,
    default_counting_width,
    deutsch_jozsa,
    grover_search_report,
    quantum_counting,
)

logger = logging.getLogger(__name__)

QUERY_KINDS = ("dj", "counting", "grover", "classical")
ROUTES = ("direct", "reduction")


@dataclass
class StepRecord:
    index: int
    name: str
    decision: str
    measured: Dict[str, object] = field(default_factory=dict)
    queries: Dict[str, int] = field(default_factory=dict)
    reason: Optional[str] = None

    @property
    def total_queries(self) -> int:
        return sum(self.queries.values())

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "name": self.name,
            "decision": self.decision,
            "measured": self.measured,
            "queries": {kind: self.queries.get(kind, 0) for kind in QUERY_KINDS},
            "reason": self.reason,
        }


@dataclass
class VerdictTrace:
    num_vars: int
    final: Verdict
    sim_config: SimConfig
    t: Optional[int]
    steps: List[StepRecord] = field(default_factory=list)
    route: str = "self-dual"

    @property
    def queries(self) -> Dict[str, int]:
        totals = {kind: 0 for kind in QUERY_KINDS}
        for step in self.steps:
            for kind, count in step.queries.items():
                totals[kind] += count
        return totals

    @property
    def total_queries(self) -> int:
        return sum(self.queries.values())

    def to_dict(self) -> dict:
        config_echo = self.sim_config.to_dict()
        config_echo.update({"t": self.t, "route": self.route})
        return {
            "num_vars": self.num_vars,
            "steps": [step.to_dict() for step in self.steps],
            "final": self.final.to_dict(),
            "queries": self.queries,
            "config": config_echo,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


class _TraceBuilder:
    """Accumulates step records with consecutive indices."""

    def __init__(self) -> None:
        self.steps: List[StepRecord] = []

    def add(
        self,
        name: str,
        decision: str,
        measured: Optional[Dict[str, object]] = None,
        queries: Optional[Dict[str, int]] = None,
        reason: Optional[Reason] = None,
    ) -> StepRecord:
        record = StepRecord(
            index=len(self.steps) + 1,
            name=name,
            decision=decision,
            measured=measured or {},
            queries={k: v for k, v in (queries or {}).items() if v},
            reason=reason.value if reason is not None else None,
        )
        self.steps.append(record)
        logger.debug("Step %d %s: %s %s", record.index, name, decision, record.measured)
        return record

    def extend(self, records: List[StepRecord]) -> None:
        for record in records:
            record.index = len(self.steps) + 1
            self.steps.append(record)


def _require_antichain(f: MonotoneDNF, label: str) -> None:
    if not is_prime_antichain(f):
        raise NotAntichainError(f"{label} is not a prime antichain")


def _run_dj(
    oracle: BooleanOracle, n: int, repetitions: int, rng, reject_on_zero: bool
) -> tuple:
    """Repeat Deutsch-Jozsa; stop early on the first rejecting outcome."""
    before = oracle.applications
    outcomes = []
    rejected = False
    for _ in range(repetitions):
        z = deutsch_jozsa(oracle, n, rng)
        outcomes.append(z)
        if (z == 0) == reject_on_zero:
            rejected = True
            break
    return outcomes, rejected, oracle.applications - before


def _check_qubit_budget(n: int, t: int) -> None:
    if n + t > config.MAX_QUBITS or n + 1 > config.MAX_QUBITS:
        raise ArityTooLargeError(
            f"{n} variables with counting width {t} exceed {config.MAX_QUBITS} qubits"
        )


# --- self-duality -------------------------------------------------------------
def quantum_self_dual(f: MonotoneDNF, sim_config: Optional[SimConfig] = None) -> VerdictTrace:
    """Decide self-duality of ``f`` with the five-step quantum pipeline."""
    sim_config = sim_config or SimConfig()
    n = f.num_vars
    if f.is_constant:
        raise ConstantFunctionError("constant functions are not accepted by the pipeline")
    if n < 2:
        raise DualityError("the pipeline needs at least 2 variables")
    _require_antichain(f, "f")
    t = sim_config.t or default_counting_width(n)
    _check_qubit_budget(n, t)

    rng = make_rng(sim_config.seed)
    builder = _TraceBuilder()

    def finish(verdict: Verdict) -> VerdictTrace:
        logger.info(
            "Self-duality on %d variables: %s (%s), %d queries",
            n, verdict.answer, verdict.reason.value,
            sum(step.total_queries for step in builder.steps),
        )
        return VerdictTrace(n, verdict, sim_config, t, builder.steps)

    f_oracle = dnf_oracle(f)

    outcomes, rejected, used = _run_dj(
        f_oracle, n, sim_config.dj_repetitions, rng, reject_on_zero=True
    )
    measured: Dict[str, object] = {"z": outcomes[-1], "outcomes": outcomes}
    if rejected:
        builder.add("balance", "reject", measured, {"dj": used}, Reason.NOT_BALANCED)
        return finish(Verdict(False, Reason.NOT_BALANCED))
    builder.add("balance", "pass", measured, {"dj": used})

    h_oracle = build_h_oracle(f, f)
    outcomes, rejected, used = _run_dj(
        h_oracle, n, sim_config.dj_repetitions, rng, reject_on_zero=False
    )
    measured = {"z": outcomes[-1], "outcomes": outcomes}
    if rejected:
        builder.add("h_constant", "reject", measured, {"dj": used}, Reason.H_NOT_CONSTANT_ZERO)
        return finish(Verdict(False, Reason.H_NOT_CONSTANT_ZERO))
    builder.add("h_constant", "pass", measured, {"dj": used})

    estimate = quantum_counting(f_oracle, n, t, rng)
    accepted = accepted_counting_outcomes(t, sim_config.strict)
    measured = {**estimate.to_dict(), "accepted": list(accepted)}
    queries = {"counting": estimate.applications}
    if estimate.y not in accepted:
        builder.add("counting", "reject", measured, queries, Reason.COUNT_MISMATCH)
        return finish(Verdict(False, Reason.COUNT_MISMATCH))
    builder.add("counting", "pass", measured, queries)

    predicate = build_violation_oracle(f)
    report = grover_search_report(predicate, n, sim_config, rng)
    measured = {
        "candidate": report.witness,
        "attempts": report.attempts,
        "runs": report.runs,
    }
    queries = {"grover": report.iterations, "classical": report.verifications}
    if report.witness is not None:
        builder.add("grover", "reject", measured, queries, Reason.WITNESS_FOUND)
        return finish(Verdict(False, Reason.WITNESS_FOUND, witness=report.witness))
    builder.add("grover", "pass", measured, queries)

    builder.add("accept", "accept", reason=Reason.ALL_TESTS_PASSED)
    return finish(Verdict(True, Reason.ALL_TESTS_PASSED))


# --- dual pairs ---------------------------------------------------------------
def _lift_reduction_witness(x: int, n: int) -> Optional[int]:
    """Map a witness of the ``y f | z g | y z`` reduction back to ``n`` variables."""
    low = x & ((1 << n) - 1)
    y_bit, z_bit = (x >> n) & 1, (x >> (n + 1)) & 1
    if (y_bit, z_bit) == (1, 0):
        return low
    if (y_bit, z_bit) == (0, 1):
        return complement_index(low, n)
    return None


def _direct_route(
    f: MonotoneDNF, g: MonotoneDNF, sim_config: SimConfig, builder: _TraceBuilder
) -> Verdict:
    n = f.num_vars
    _check_qubit_budget(n, 0)
    rng = make_rng(sim_config.seed)
    h_oracle = build_h_oracle(f, g)
    outcomes, rejected, used = _run_dj(
        h_oracle, n, sim_config.dj_repetitions, rng, reject_on_zero=False
    )
    measured: Dict[str, object] = {"z": outcomes[-1], "outcomes": outcomes}
    if rejected:
        builder.add("h_constant", "reject", measured, {"dj": used}, Reason.H_NOT_CONSTANT_ZERO)
        return Verdict(False, Reason.H_NOT_CONSTANT_ZERO)
    builder.add("h_constant", "pass", measured, {"dj": used})

    predicate = build_h_oracle(f, g, name="dual violation")
    report = grover_search_report(predicate, n, sim_config, rng)
    measured = {"candidate": report.witness, "attempts": report.attempts, "runs": report.runs}
    queries = {"grover": report.iterations, "classical": report.verifications}
    if report.witness is not None:
        builder.add("grover", "reject", measured, queries, Reason.WITNESS_FOUND)
        return Verdict(False, Reason.WITNESS_FOUND, witness=report.witness)
    builder.add("grover", "pass", measured, queries)
    builder.add("accept", "accept", reason=Reason.ALL_TESTS_PASSED)
    return Verdict(True, Reason.ALL_TESTS_PASSED)


def quantum_dual_pair(
    f: MonotoneDNF,
    g: MonotoneDNF,
    sim_config: Optional[SimConfig] = None,
    route: str = "direct",
) -> VerdictTrace:
    """Decide whether ``g`` is the dual of ``f``.

    Both routes start with the classical pairwise-intersection precheck. The
    ``direct`` route runs Deutsch-Jozsa and Grover on ``h``; the ``reduction``
    route runs :func:`quantum_self_dual` on ``y f | z g | y z`` and maps its
    witness back to the original variables.
    """
    sim_config = sim_config or SimConfig()
    if route not in ROUTES:
        raise DualityError(f"unknown route {route!r}, expected one of {ROUTES}")
    if f.num_vars != g.num_vars:
        raise ArityMismatchError(f"arity mismatch: {f.num_vars} vs {g.num_vars} variables")
    _require_antichain(f, "f")
    _require_antichain(g, "g")
    n = f.num_vars
    builder = _TraceBuilder()
    t: Optional[int] = None

    holds, pair = intersection_condition(f, g)
    if not holds:
        assert pair is not None
        builder.add(
            "intersection",
            "reject",
            {"pair": [list(pair[0]), list(pair[1])]},
            reason=Reason.INTERSECTION_VIOLATED,
        )
        verdict = Verdict(
            False,
            Reason.INTERSECTION_VIOLATED,
            witness=implicant_mask(pair[0]),
            witness_pair=pair,
        )
    else:
        builder.add("intersection", "pass")
        if route == "direct":
            verdict = _direct_route(f, g, sim_config, builder)
        else:
            inner = quantum_self_dual(self_dual_reduction(f, g), sim_config)
            builder.extend(inner.steps)
            t = inner.t
            verdict = inner.final
            if verdict.witness is not None:
                verdict = Verdict(
                    False,
                    verdict.reason,
                    witness=_lift_reduction_witness(verdict.witness, n),
                )

    logger.info(
        "Dual pair on %d variables via %s: %s (%s)",
        n, route, verdict.answer, verdict.reason.value,
    )
    return VerdictTrace(n, verdict, sim_config, t, builder.steps, route=route)


# --- classical cross-check ----------------------------------------------------
@dataclass(frozen=True)
class CrossValidation:
    quantum_answer: bool
    classical_answer: bool
    classification: str
    classical_witness: Optional[int] = None

    @property
    def agree(self) -> bool:
        return self.classification == "agree"

    def to_dict(self) -> dict:
        return {
            "quantum_answer": self.quantum_answer,
            "classical_answer": self.classical_answer,
            "classification": self.classification,
            "classical_witness": self.classical_witness,
        }


def cross_validate(
    f: MonotoneDNF, g: Optional[MonotoneDNF], trace: VerdictTrace
) -> CrossValidation:
    """Compare a quantum verdict with the brute-force oracle.

    A quantum True on a classically False input is the documented one-sided
    miss; a quantum False on a classically True input is a defect.
    """
    if g is None:
        classical = is_self_dual_brute(dnf_oracle(f))
    else:
        classical = is_dual_pair_brute(dnf_oracle(f), dnf_oracle(g))
    quantum = trace.final.answer
    if quantum == classical.answer:
        classification = "agree"
    elif quantum:
        classification = "one_sided_miss"
        logger.warning("One-sided miss: quantum accepted, witness x=%s", classical.witness)
    else:
        classification = "defect"
        logger.error("Defect: quantum rejected (%s) a classically true input",
                     trace.final.reason.value)
    return CrossValidation(quantum, classical.answer, classification, classical.witness)
