"""Exhaustive classical ground truth for every quantum verdict."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

import numpy as np

from src import config
from src.errors import ArityMismatchError, ArityTooLargeError, DualityError
from src.logic.dnf import (
    BooleanOracle,
    MonotoneDNF,
    Reason,
    Verdict,
    dnf_oracle,
    implicant_mask,
    intersection_condition,
)

logger = logging.getLogger(__name__)

# Dedekind numbers explode past five variables (7,828,354 functions at n = 6).
ENUMERATION_CAP = 5


def _check_cap(n: int, cap: Optional[int] = None) -> None:
    limit = config.CLASSICAL_ARITY_CAP if cap is None else cap
    if n > limit:
        raise ArityTooLargeError(f"arity {n} exceeds classical cap {limit}")


@dataclass(frozen=True)
class TruthTable:
    arity: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        if len(self.bits) != 1 << self.arity:
            raise DualityError(
                f"truth table needs {1 << self.arity} entries, got {len(self.bits)}"
            )

    def __getitem__(self, x: int) -> int:
        return int(self.bits[x])

    def __len__(self) -> int:
        return len(self.bits)

    def count(self) -> int:
        return int(self.bits.sum(dtype=np.int64))

    def complemented(self) -> np.ndarray:
        """``bits`` re-indexed by ``~x``; complementing on n bits reverses the table."""
        return self.bits[::-1]

    def is_monotone(self) -> bool:
        xs = np.arange(len(self.bits))
        for i in range(self.arity):
            low = xs[(xs >> i) & 1 == 0]
            if np.any(self.bits[low] > self.bits[low | (1 << i)]):
                return False
        return True

    def to_list(self) -> List[int]:
        return [int(b) for b in self.bits]


def truth_table(oracle: BooleanOracle, cap: Optional[int] = None) -> TruthTable:
    """Evaluate ``oracle`` on every input (exactly ``2**n`` queries)."""
    _check_cap(oracle.arity, cap)
    return TruthTable(oracle.arity, oracle.evaluate_all())


def count_satisfying(f: BooleanOracle, cap: Optional[int] = None) -> int:
    return truth_table(f, cap).count()


def is_balanced(f: BooleanOracle, cap: Optional[int] = None) -> bool:
    return count_satisfying(f, cap) == 1 << (f.arity - 1)


def _first_index(mask: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def find_self_dual_violation(f: BooleanOracle, cap: Optional[int] = None) -> Optional[int]:
    """Smallest ``x`` with ``f(x) == f(~x)``, or ``None`` when f is self-dual."""
    table = truth_table(f, cap)
    return _first_index(table.bits == table.complemented())


def is_self_dual_brute(f: BooleanOracle, cap: Optional[int] = None) -> Verdict:
    witness = find_self_dual_violation(f, cap)
    if witness is None:
        return Verdict(True, Reason.ALL_TESTS_PASSED)
    return Verdict(False, Reason.WITNESS_FOUND, witness=witness)


def is_dual_pair_brute(
    f: BooleanOracle, g: BooleanOracle, cap: Optional[int] = None
) -> Verdict:
    """Check ``f(x) == 1 - g(~x)`` for every ``x``."""
    if f.arity != g.arity:
        raise ArityMismatchError(f"arity mismatch: {f.arity} vs {g.arity}")
    f_table = truth_table(f, cap)
    g_table = truth_table(g, cap)
    witness = _first_index(f_table.bits != 1 - g_table.complemented())
    if witness is None:
        return Verdict(True, Reason.ALL_TESTS_PASSED)
    return Verdict(False, Reason.WITNESS_FOUND, witness=witness)


def classical_self_dual_lemma2(f: MonotoneDNF, cap: Optional[int] = None) -> Verdict:
    """Self-duality as pairwise intersection plus a count of exactly ``2**(n-1)``."""
    _check_cap(f.num_vars, cap)
    holds, pair = intersection_condition(f, f)
    if not holds:
        assert pair is not None
        # x = mask(I) has f(x) = 1 and ~x covers J, so f(~x) = 1 as well
        return Verdict(
            False,
            Reason.INTERSECTION_VIOLATED,
            witness=implicant_mask(pair[0]),
            witness_pair=pair,
        )
    if count_satisfying(dnf_oracle(f), cap) != 1 << (f.num_vars - 1):
        return Verdict(False, Reason.COUNT_MISMATCH)
    return Verdict(True, Reason.ALL_TESTS_PASSED)


# --- monotone corpora ---------------------------------------------------------
def dnf_from_truth_table(table: TruthTable) -> MonotoneDNF:
    """Prime DNF of a monotone table: one implicant per minimal true point."""
    bits = table.bits
    if bits[0]:
        raise DualityError("constant-1 has no DNF with non-empty implicants")
    xs = np.arange(len(bits))
    minimal = bits.astype(bool)
    for i in range(table.arity):
        has_bit = (xs >> i) & 1 == 1
        minimal &= ~(has_bit & (bits[xs ^ (1 << i)] == 1))
    implicants = [
        tuple(i + 1 for i in range(table.arity) if (x >> i) & 1)
        for x in np.flatnonzero(minimal)
    ]
    return MonotoneDNF(table.arity, tuple(implicants))


def dual_of(f: MonotoneDNF, cap: Optional[int] = None) -> MonotoneDNF:
    """Prime DNF of the dual ``x -> 1 - f(~x)`` of a non-constant ``f``."""
    table = truth_table(dnf_oracle(f), cap)
    return dnf_from_truth_table(TruthTable(f.num_vars, 1 - table.complemented()))


@lru_cache(maxsize=None)
def _monotone_tables(n: int) -> tuple:
    if n == 0:
        return (np.array([0], dtype=np.uint8), np.array([1], dtype=np.uint8))
    smaller = _monotone_tables(n - 1)
    tables = []
    # variable n is the top bit: lower half has x_n = 0, upper half x_n = 1
    for low in smaller:
        for high in smaller:
            if np.all(low <= high):
                tables.append(np.concatenate([low, high]))
    return tuple(tables)


def enumerate_monotone(n: int) -> List[TruthTable]:
    """Every monotone boolean function on ``n`` variables (constants included)."""
    if n > ENUMERATION_CAP:
        raise ArityTooLargeError(f"cannot enumerate monotone functions beyond n={ENUMERATION_CAP}")
    tables = [TruthTable(n, bits.copy()) for bits in _monotone_tables(n)]
    logger.debug("Enumerated %d monotone functions on %d variables", len(tables), n)
    return tables
