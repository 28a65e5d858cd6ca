"""Deutsch-Jozsa, unknown-count Grover search and quantum counting."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src import config
from src.errors import (
    ArityMismatchError,
    DualityError,
    TooManyQubitsError,
    WidthTooSmallError,
)
from src.logic.dnf import BooleanOracle
from src.logic.statevector import (
    apply_controlled_grover,
    apply_diffusion,
    apply_hadamard,
    apply_inverse_qft,
    apply_phase_oracle,
    apply_x,
    apply_xor_oracle,
    check_norm,
    init_uniform,
    measure_register,
    zero_state,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimConfig:
    """Knobs of one simulated pipeline run.

    ``t`` overrides the counting-register width; ``strict`` accepts only the
    principal counting outcome ``2**(t-2)``.
    """

    seed: int = field(default_factory=lambda: config.DEFAULT_SEED)
    growth: float = field(default_factory=lambda: config.GROVER_GROWTH)
    restarts: int = field(default_factory=lambda: config.GROVER_RESTARTS)
    dj_repetitions: int = field(default_factory=lambda: config.DJ_REPETITIONS)
    strict: bool = False
    t: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.growth > 1:
            raise DualityError(f"growth factor must exceed 1, got {self.growth}")
        if self.restarts < 1:
            raise DualityError(f"restart budget must be at least 1, got {self.restarts}")
        if self.dj_repetitions < 1:
            raise DualityError(f"dj repetitions must be at least 1, got {self.dj_repetitions}")
        if self.t is not None and self.t < 2:
            raise WidthTooSmallError(f"counting width must be at least 2, got {self.t}")

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "lambda": self.growth,
            "R": self.restarts,
            "dj_repetitions": self.dj_repetitions,
            "strict": self.strict,
        }


def _check_arity(oracle: BooleanOracle, n: int) -> None:
    if oracle.arity != n:
        raise ArityMismatchError(f"oracle arity {oracle.arity} but n = {n}")


# --- Deutsch-Jozsa ------------------------------------------------------------
def deutsch_jozsa(oracle: BooleanOracle, n: int, rng: np.random.Generator) -> int:
    """Run Deutsch-Jozsa once and return the measured input register ``z``.

    ``z`` is drawn from ``|2**-n sum_x (-1)**(x.z + h(x))|**2``; a constant
    oracle yields ``z = 0`` with certainty, a balanced one never does.
    """
    _check_arity(oracle, n)
    inputs = list(range(n))
    state = zero_state(n + 1)
    apply_x(state, n)
    apply_hadamard(state, inputs + [n])
    apply_xor_oracle(state, oracle, inputs, n)
    apply_hadamard(state, inputs)
    z, state = measure_register(state, inputs, rng)
    check_norm(state)
    logger.debug("Deutsch-Jozsa on %s measured z=%d", oracle.name, z)
    return z


def analytic_dj_distribution(bits: np.ndarray) -> np.ndarray:
    """Exact Deutsch-Jozsa outcome distribution via a Walsh-Hadamard transform."""
    signs = 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)
    size = signs.size
    step = 1
    while step < size:
        view = signs.reshape(-1, 2, step)
        low, high = view[:, 0, :].copy(), view[:, 1, :].copy()
        view[:, 0, :] = low + high
        view[:, 1, :] = low - high
        step *= 2
    return (signs / size) ** 2


# --- Grover search ------------------------------------------------------------
@dataclass
class GroverReport:
    witness: Optional[int] = None
    runs: int = 0
    attempts: int = 0
    iterations: int = 0
    verifications: int = 0
    candidates: List[int] = field(default_factory=list)

    @property
    def queries(self) -> int:
        return self.iterations + self.verifications


def run_budget(n: int) -> int:
    """Queries one run of the schedule may spend: ``2 + 2 * ceil(sqrt(2**n))``."""
    return 2 + 2 * math.ceil(math.sqrt(1 << n))


def grover_search_report(
    predicate: BooleanOracle,
    n: int,
    sim_config: SimConfig,
    rng: np.random.Generator,
) -> GroverReport:
    """Unknown-count Grover search with classical verification.

    Each of ``sim_config.restarts`` runs starts at ``m = 1``; an attempt draws
    ``j`` uniformly from ``[0, m)``, applies ``j`` Grover iterates, measures and
    spends one classical query verifying the candidate. ``m`` then grows by
    ``sim_config.growth`` up to ``ceil(sqrt(2**n))``. A run ends when the next
    attempt would exceed :func:`run_budget`.
    """
    _check_arity(predicate, n)
    if n > config.MAX_QUBITS:
        raise TooManyQubitsError(f"{n} qubits exceeds cap of {config.MAX_QUBITS}")
    register = list(range(n))
    cap = math.ceil(math.sqrt(1 << n))
    budget = run_budget(n)
    report = GroverReport()

    for _ in range(sim_config.restarts):
        report.runs += 1
        m = 1.0
        used = 0
        while True:
            j = int(rng.integers(0, math.ceil(m)))
            if used + j + 1 > budget:
                break
            state = init_uniform(n)
            for _ in range(j):
                apply_phase_oracle(state, predicate, register)
                apply_diffusion(state, register)
            candidate, state = measure_register(state, register, rng)
            check_norm(state)
            used += j + 1
            report.attempts += 1
            report.iterations += j
            report.verifications += 1
            report.candidates.append(candidate)
            if predicate(candidate):
                report.witness = candidate
                logger.debug(
                    "Grover verified x=%d after %d attempts", candidate, report.attempts
                )
                return report
            m = min(m * sim_config.growth, float(cap))
    logger.debug("Grover found no verified solution in %d runs", report.runs)
    return report


def grover_search_unknown(
    predicate: BooleanOracle,
    n: int,
    sim_config: SimConfig,
    rng: np.random.Generator,
) -> Optional[int]:
    """Return a verified ``x`` with ``predicate(x) = 1`` or ``None``."""
    return grover_search_report(predicate, n, sim_config, rng).witness


# --- quantum counting ---------------------------------------------------------
@dataclass(frozen=True)
class CountingEstimate:
    y: int
    t: int
    n: int
    applications: int

    @property
    def m_hat(self) -> float:
        """``2**n * sin(pi y / 2**t)**2``."""
        return (1 << self.n) * math.sin(math.pi * self.y / (1 << self.t)) ** 2

    def to_dict(self) -> dict:
        return {"y": self.y, "t": self.t, "m_hat": self.m_hat}


def default_counting_width(n: int) -> int:
    return max(2, math.ceil(n / 2))


def accepted_counting_outcomes(t: int, strict: bool = False) -> tuple:
    """Outcomes encoding ``M = 2**(n-1)``: both eigenphases, or the principal one."""
    quarter = 1 << (t - 2)
    return (quarter,) if strict else (quarter, 3 * quarter)


def quantum_counting(
    predicate: BooleanOracle, n: int, t: int, rng: np.random.Generator
) -> CountingEstimate:
    """Phase estimation of the Grover iterate with a ``t``-qubit register.

    Input qubits are ``0..n-1`` and counting qubit ``j`` is ``n + j``; it
    controls ``2**j`` sequential Grover iterates, ``2**t - 1`` in total.
    """
    _check_arity(predicate, n)
    if t < 2:
        raise WidthTooSmallError(f"counting width must be at least 2, got {t}")
    if n + t > config.MAX_QUBITS:
        raise TooManyQubitsError(
            f"{n} input + {t} counting qubits exceeds cap of {config.MAX_QUBITS}"
        )
    inputs = list(range(n))
    counting = list(range(n, n + t))
    before = predicate.applications
    state = init_uniform(n + t)
    for j, control in enumerate(counting):
        apply_controlled_grover(state, predicate, inputs, control, 1 << j)
    apply_inverse_qft(state, counting)
    y, state = measure_register(state, counting, rng)
    check_norm(state)
    estimate = CountingEstimate(y, t, n, predicate.applications - before)
    logger.debug(
        "Counting on %s: y=%d t=%d m_hat=%.3f", predicate.name, y, t, estimate.m_hat
    )
    return estimate
