"""Minimal statevector simulator for the duality algorithm.

Qubit ``k`` is bit ``k`` of the amplitude index (least-significant first),
matching the variable convention of :mod:`src.logic.dnf`. A register is an
ordered list of qubits; its value is ``sum(bit(register[j]) << j)``.

Operations update the state in place and return it so calls can be chained.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from src import config
from src.errors import DegenerateStateError, QubitIndexError, TooManyQubitsError
from src.logic.dnf import BooleanOracle

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-10
MEASURE_FLOOR = 1e-9

_SQRT2_INV = 1 / math.sqrt(2)


class StateVector:
    """Normalised complex amplitudes over ``num_qubits`` qubits."""

    def __init__(self, amplitudes: np.ndarray) -> None:
        amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        q = amplitudes.size.bit_length() - 1
        if amplitudes.size != 1 << q or q < 1:
            raise QubitIndexError(f"{amplitudes.size} amplitudes is not a qubit register")
        self.num_qubits = q
        self.amplitudes = amplitudes

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def copy(self) -> "StateVector":
        return StateVector(self.amplitudes.copy())

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


def _check_qubit_count(q: int) -> None:
    if q < 1:
        raise QubitIndexError(f"need at least one qubit, got {q}")
    if q > config.MAX_QUBITS:
        raise TooManyQubitsError(f"{q} qubits exceeds cap of {config.MAX_QUBITS}")


def _check_register(state: StateVector, qubits: Sequence[int]) -> list:
    qubits = list(qubits)
    if not qubits:
        raise QubitIndexError("register is empty")
    if len(set(qubits)) != len(qubits):
        raise QubitIndexError(f"register {qubits} repeats a qubit")
    for k in qubits:
        if not 0 <= k < state.num_qubits:
            raise QubitIndexError(f"qubit {k} outside 0..{state.num_qubits - 1}")
    return qubits


def _split(state: StateVector, register: list) -> Tuple[np.ndarray, Optional[list]]:
    """Reshape amplitudes to ``(2**len(register), rest)`` keyed by register value.

    Returns the matrix and the axis permutation needed by :func:`_merge`, or
    ``None`` when the matrix is a view that already writes through.
    """
    q, m = state.num_qubits, len(register)
    if register == list(range(m)):
        return state.amplitudes.reshape(-1, 1 << m).T, None
    if register == list(range(q - m, q)):
        return state.amplitudes.reshape(1 << m, -1), None
    # C-order axis for qubit k is q - 1 - k; the register's top bit goes first
    front = [q - 1 - k for k in reversed(register)]
    rest = [a for a in range(q) if a not in front]
    perm = front + rest
    matrix = np.transpose(state.amplitudes.reshape([2] * q), perm).reshape(1 << m, -1)
    return matrix, perm


def _merge(state: StateVector, matrix: np.ndarray, perm: Optional[list]) -> None:
    if perm is None:
        return
    q = state.num_qubits
    restored = np.transpose(matrix.reshape([2] * q), np.argsort(perm))
    state.amplitudes = np.ascontiguousarray(restored).reshape(-1)


def _check_oracle_width(oracle: BooleanOracle, qubits: list) -> None:
    if oracle.arity != len(qubits):
        raise QubitIndexError(
            f"oracle arity {oracle.arity} does not match register width {len(qubits)}"
        )


# --- kernels shared by plain and controlled operations ------------------------
def _phase_flip(block: np.ndarray, marked: np.ndarray) -> None:
    block[marked] *= -1


def _invert_about_mean(block: np.ndarray) -> None:
    mean = block.mean(axis=0, keepdims=True)
    block[...] = 2 * mean - block


# --- preparation --------------------------------------------------------------
def zero_state(q: int, basis: int = 0) -> StateVector:
    """Computational basis state ``|basis>`` on ``q`` qubits."""
    _check_qubit_count(q)
    if not 0 <= basis < 1 << q:
        raise QubitIndexError(f"basis index {basis} outside 0..{(1 << q) - 1}")
    amplitudes = np.zeros(1 << q, dtype=np.complex128)
    amplitudes[basis] = 1.0
    return StateVector(amplitudes)


def init_uniform(q: int) -> StateVector:
    _check_qubit_count(q)
    size = 1 << q
    return StateVector(np.full(size, 1 / math.sqrt(size), dtype=np.complex128))


# --- gates --------------------------------------------------------------------
def apply_x(state: StateVector, qubit: int) -> StateVector:
    (qubit,) = _check_register(state, [qubit])
    view = state.amplitudes.reshape(-1, 2, 1 << qubit)
    view[:, [0, 1], :] = view[:, [1, 0], :]
    return state


def apply_hadamard(state: StateVector, qubits: Sequence[int]) -> StateVector:
    for k in _check_register(state, qubits):
        view = state.amplitudes.reshape(-1, 2, 1 << k)
        low, high = view[:, 0, :].copy(), view[:, 1, :].copy()
        view[:, 0, :] = (low + high) * _SQRT2_INV
        view[:, 1, :] = (low - high) * _SQRT2_INV
    return state


def apply_xor_oracle(
    state: StateVector,
    oracle: BooleanOracle,
    input_qubits: Sequence[int],
    target_qubit: int,
) -> StateVector:
    """``|x>|y> -> |x>|y XOR oracle(x)>``; one black-box application."""
    inputs = _check_register(state, input_qubits)
    register = _check_register(state, inputs + [target_qubit])
    _check_oracle_width(oracle, inputs)
    size = oracle.size
    flips = np.flatnonzero(oracle.truth_vector())
    matrix, perm = _split(state, register)
    # target is the register's top bit: rows x and x + 2**n differ only in it
    swapped = np.concatenate([flips, flips + size])
    matrix[swapped] = matrix[np.concatenate([flips + size, flips])]
    _merge(state, matrix, perm)
    oracle.record_application()
    return state


def apply_phase_oracle(
    state: StateVector, predicate: BooleanOracle, input_qubits: Sequence[int]
) -> StateVector:
    """Negate amplitudes whose input register satisfies ``predicate``."""
    register = _check_register(state, input_qubits)
    _check_oracle_width(predicate, register)
    matrix, perm = _split(state, register)
    _phase_flip(matrix, predicate.truth_vector().astype(bool))
    _merge(state, matrix, perm)
    predicate.record_application()
    return state


def apply_diffusion(state: StateVector, input_qubits: Sequence[int]) -> StateVector:
    """Inversion about the mean, ``2|s><s| - I`` on the input register."""
    register = _check_register(state, input_qubits)
    matrix, perm = _split(state, register)
    _invert_about_mean(matrix)
    _merge(state, matrix, perm)
    return state


def apply_controlled_grover(
    state: StateVector,
    predicate: BooleanOracle,
    input_qubits: Sequence[int],
    control: int,
    power: int,
) -> StateVector:
    """Apply the Grover iterate ``power`` times where ``control`` is 1.

    Each repetition is one phase-oracle application followed by diffusion;
    powers are applied sequentially, never exponentiated.
    """
    inputs = _check_register(state, input_qubits)
    register = _check_register(state, inputs + [control])
    _check_oracle_width(predicate, inputs)
    marked = predicate.truth_vector().astype(bool)
    matrix, perm = _split(state, register)
    block = matrix[predicate.size:]
    for _ in range(power):
        _phase_flip(block, marked)
        _invert_about_mean(block)
        predicate.record_application()
    _merge(state, matrix, perm)
    return state


def apply_qft(state: StateVector, register: Sequence[int]) -> StateVector:
    register = _check_register(state, register)
    matrix, perm = _split(state, register)
    size = matrix.shape[0]
    matrix[...] = np.fft.ifft(matrix, axis=0) * math.sqrt(size)
    _merge(state, matrix, perm)
    return state


def apply_inverse_qft(state: StateVector, register: Sequence[int]) -> StateVector:
    """Inverse QFT: ``|c> -> 2**(-t/2) sum_y exp(-2 pi i c y / 2**t) |y>``."""
    register = _check_register(state, register)
    matrix, perm = _split(state, register)
    size = matrix.shape[0]
    matrix[...] = np.fft.fft(matrix, axis=0) / math.sqrt(size)
    _merge(state, matrix, perm)
    return state


# --- readout ------------------------------------------------------------------
def register_probabilities(state: StateVector, register: Sequence[int]) -> np.ndarray:
    register = _check_register(state, register)
    matrix, _ = _split(state, register)
    return np.sum(np.abs(matrix) ** 2, axis=1)


def measure_register(
    state: StateVector, register: Sequence[int], rng: np.random.Generator
) -> Tuple[int, StateVector]:
    """Born-rule measurement of ``register`` with one uniform draw.

    The draw is compared against the cumulative probability of outcomes in
    ascending order; the state collapses and is renormalised.
    """
    register = _check_register(state, register)
    matrix, perm = _split(state, register)
    probs = np.sum(np.abs(matrix) ** 2, axis=1)
    cumulative = np.cumsum(probs)
    total = float(cumulative[-1])
    if total < MEASURE_FLOOR:
        raise DegenerateStateError(f"cannot measure a state of norm {total:.3e}")
    draw = rng.random() * total
    outcome = int(np.searchsorted(cumulative, draw, side="right"))
    if outcome >= len(probs):
        outcome = int(np.flatnonzero(probs)[-1])
    keep = matrix[outcome] / math.sqrt(probs[outcome])
    matrix[...] = 0
    matrix[outcome] = keep
    _merge(state, matrix, perm)
    return outcome, state


def check_norm(state: StateVector, tolerance: float = NORM_TOLERANCE) -> None:
    drift = abs(state.norm() - 1.0)
    if drift > tolerance:
        raise DegenerateStateError(f"state norm drifted by {drift:.3e}")
