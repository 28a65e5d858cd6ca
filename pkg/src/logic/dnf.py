"""Prime monotone DNF formulas and the boolean oracles built from them.

Bit convention used everywhere in the package: variable ``i`` (1-based) is
bit ``i - 1`` of the integer input, least-significant bit first.
"""

from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import (
    ArityMismatchError,
    DomainError,
    DualityError,
    EvenArityError,
    IndexOutOfRangeError,
)

logger = logging.getLogger(__name__)

Implicant = Tuple[int, ...]
ImplicantPair = Tuple[Implicant, Implicant]


# --- formulas ---------------------------------------------------------------
@dataclass(frozen=True)
class MonotoneDNF:
    """A monotone DNF ``OR_{I in F} AND_{i in I} x_i`` over ``num_vars`` variables.

    Implicants are normalised to ascending tuples and kept in lexicographic
    order, so two formulas with the same implicant family compare equal.
    Whole-implicant duplicates and containments are *not* removed here; use
    :func:`is_prime_antichain` or the parser to enforce primality.
    An empty implicant family is the constant-0 function.
    """

    num_vars: int
    implicants: Tuple[Implicant, ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise DualityError(f"num_vars must be positive, got {self.num_vars}")
        normalised: List[Implicant] = []
        for imp in self.implicants:
            if not imp:
                raise DualityError("implicants must be non-empty")
            for i in imp:
                if not 1 <= i <= self.num_vars:
                    raise IndexOutOfRangeError(
                        f"variable index {i} outside 1..{self.num_vars}"
                    )
            normalised.append(tuple(sorted(set(imp))))
        object.__setattr__(self, "implicants", tuple(sorted(normalised)))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Implicants as n-bit masks, in the same order as :attr:`implicants`."""
        return tuple(implicant_mask(imp) for imp in self.implicants)

    @property
    def is_constant(self) -> bool:
        return not self.implicants

    def __len__(self) -> int:
        return len(self.implicants)


def implicant_mask(implicant: Iterable[int]) -> int:
    """Return the bit mask with bit ``i - 1`` set for each index ``i``."""
    mask = 0
    for i in implicant:
        mask |= 1 << (i - 1)
    return mask


def _check_input(x: int, n: int) -> None:
    if not 0 <= x < (1 << n):
        raise DomainError(f"input {x} outside [0, 2**{n})")


def _require_same_arity(f: MonotoneDNF, g: MonotoneDNF) -> int:
    if f.num_vars != g.num_vars:
        raise ArityMismatchError(
            f"arity mismatch: {f.num_vars} vs {g.num_vars} variables"
        )
    return f.num_vars


# --- evaluation -------------------------------------------------------------
def evaluate(f: MonotoneDNF, x: int) -> int:
    """Return ``f(x)`` as 0/1."""
    _check_input(x, f.num_vars)
    return int(any(x & m == m for m in f.masks))


def evaluate_table(f: MonotoneDNF, xs: np.ndarray) -> np.ndarray:
    """Vectorised :func:`evaluate` over an integer array of inputs."""
    out = np.zeros(xs.shape, dtype=bool)
    for m in f.masks:
        out |= (xs & m) == m
    return out.astype(np.uint8)


def complement_index(x: int, n: int) -> int:
    """Return ``2**n - x - 1``, the bitwise complement of ``x`` on ``n`` bits."""
    _check_input(x, n)
    return (1 << n) - x - 1


def hamming_weight(x: int) -> int:
    if x < 0:
        raise DomainError(f"hamming weight undefined for negative {x}")
    return bin(x).count("1")


# --- structure ----------------------------------------------------------------
def intersection_condition(
    f: MonotoneDNF, g: MonotoneDNF
) -> Tuple[bool, Optional[ImplicantPair]]:
    """Check that every implicant of ``f`` meets every implicant of ``g``.

    Returns ``(True, None)`` or ``(False, (I, J))`` for the first disjoint
    pair in implicant order.
    """
    _require_same_arity(f, g)
    for imp_f, mask_f in zip(f.implicants, f.masks):
        for imp_g, mask_g in zip(g.implicants, g.masks):
            if mask_f & mask_g == 0:
                return False, (imp_f, imp_g)
    return True, None


def is_prime_antichain(f: MonotoneDNF) -> bool:
    """True iff no implicant repeats and none contains another."""
    masks = f.masks
    if len(set(masks)) != len(masks):
        return False
    # distinct masks of equal size never contain each other
    smaller: List[int] = []
    level: List[int] = []
    size = -1
    for mask in sorted(masks, key=hamming_weight):
        if hamming_weight(mask) != size:
            smaller += level
            level = []
            size = hamming_weight(mask)
        if any(m & mask == m for m in smaller):
            return False
        level.append(mask)
    return True


def minimize_implicants(implicants: Iterable[Sequence[int]]) -> List[Implicant]:
    """Drop duplicates and every implicant that contains another one."""
    unique = sorted({tuple(sorted(set(imp))) for imp in implicants}, key=len)
    kept: List[Implicant] = []
    kept_masks: List[int] = []
    for imp in unique:
        mask = implicant_mask(imp)
        if any(m & mask == m for m in kept_masks):
            continue
        kept.append(imp)
        kept_masks.append(mask)
    return sorted(kept)


def self_dual_reduction(f: MonotoneDNF, g: MonotoneDNF) -> MonotoneDNF:
    """Return ``y f OR z g OR y z`` on ``n + 2`` variables (``y = n+1``, ``z = n+2``).

    The result is self-dual exactly when ``f`` and ``g`` are mutually dual.
    """
    n = _require_same_arity(f, g)
    y, z = n + 1, n + 2
    implicants = [imp + (y,) for imp in f.implicants]
    implicants += [imp + (z,) for imp in g.implicants]
    implicants.append((y, z))
    return MonotoneDNF(n + 2, tuple(implicants))


def generate_majority_phi(n: int) -> MonotoneDNF:
    """Majority on odd ``n``: all implicants of size ``ceil(n/2)``."""
    if n < 1:
        raise DualityError(f"majority needs n >= 1, got {n}")
    if n % 2 == 0:
        raise EvenArityError(f"majority family needs odd n, got {n}")
    size = (n + 1) // 2
    return MonotoneDNF(n, tuple(itertools.combinations(range(1, n + 1), size)))


# --- oracles ----------------------------------------------------------------
class BooleanOracle:
    """Counted black box for a boolean function on ``[0, 2**arity)``.

    ``query_count`` counts classical evaluations, ``applications`` counts
    applications of the quantum black box built from the oracle. The
    simulator needs the full truth vector once per oracle; that one-off
    materialisation is charged as ``2**arity`` classical evaluations.
    Both counters are updated under a lock.
    """

    def __init__(
        self,
        arity: int,
        rule: Callable[[int], int],
        table_rule: Optional[Callable[[np.ndarray], np.ndarray]] = None,
        name: str = "oracle",
    ) -> None:
        if arity < 1:
            raise DualityError(f"oracle arity must be positive, got {arity}")
        self.arity = arity
        self.name = name
        self._rule = rule
        self._table_rule = table_rule
        self._lock = threading.Lock()
        self._query_count = 0
        self._applications = 0
        self._table: Optional[np.ndarray] = None

    @classmethod
    def from_table(cls, bits: Sequence[int], name: str = "table") -> "BooleanOracle":
        table = np.asarray(bits, dtype=np.uint8) & 1
        size = len(table)
        arity = size.bit_length() - 1
        if size < 2 or size != 1 << arity:
            raise DualityError(f"truth table length {size} is not a power of two")
        return cls(
            arity,
            lambda x: int(table[x]),
            lambda xs: table[xs],
            name=name,
        )

    @classmethod
    def constant(cls, arity: int, bit: int) -> "BooleanOracle":
        value = int(bit) & 1
        return cls(
            arity,
            lambda x: value,
            lambda xs: np.full(xs.shape, value, dtype=np.uint8),
            name=f"constant-{value}",
        )

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def query_count(self) -> int:
        return self._query_count

    @property
    def applications(self) -> int:
        return self._applications

    def __call__(self, x: int) -> int:
        _check_input(x, self.arity)
        with self._lock:
            self._query_count += 1
        return int(self._rule(x)) & 1

    def evaluate_all(self) -> np.ndarray:
        """Evaluate every input once; charges ``2**arity`` queries."""
        xs = np.arange(self.size, dtype=np.int64)
        if self._table_rule is not None:
            bits = np.asarray(self._table_rule(xs), dtype=np.uint8) & 1
        else:
            bits = np.fromiter(
                (int(self._rule(int(x))) & 1 for x in xs), dtype=np.uint8, count=self.size
            )
        with self._lock:
            self._query_count += self.size
        return bits

    def truth_vector(self) -> np.ndarray:
        """Cached read-only truth vector used to build quantum black boxes."""
        if self._table is None:
            table = self.evaluate_all()
            table.setflags(write=False)
            self._table = table
        return self._table

    def record_application(self) -> None:
        with self._lock:
            self._applications += 1

    def __repr__(self) -> str:
        return (
            f"BooleanOracle(name={self.name!r}, arity={self.arity}, "
            f"queries={self._query_count}, applications={self._applications})"
        )


def dnf_oracle(f: MonotoneDNF, name: str = "f") -> BooleanOracle:
    return BooleanOracle(
        f.num_vars,
        lambda x: evaluate(f, x),
        lambda xs: evaluate_table(f, xs),
        name=name,
    )


def build_h_oracle(f: MonotoneDNF, g: MonotoneDNF, name: str = "h") -> BooleanOracle:
    """Oracle for ``h(x) = f(x) XOR (1 - g(~x))``.

    ``h`` is identically zero iff ``f`` and ``g`` are mutually dual, and
    ``h(x) = 1`` exactly on the inputs violating duality. With ``g = f`` it is
    the self-duality violation predicate ``[f(x) = f(~x)]``.
    """
    n = _require_same_arity(f, g)
    top = (1 << n) - 1

    def rule(x: int) -> int:
        return evaluate(f, x) ^ (1 - evaluate(g, complement_index(x, n)))

    def table_rule(xs: np.ndarray) -> np.ndarray:
        return evaluate_table(f, xs) ^ (1 - evaluate_table(g, top - xs))

    return BooleanOracle(n, rule, table_rule, name=name)


def build_violation_oracle(f: MonotoneDNF) -> BooleanOracle:
    """Fresh oracle marking ``x`` with ``f(x) = f(~x)``, i.e. ``h`` for ``g = f``."""
    return build_h_oracle(f, f, name="self-dual violation")


# --- verdicts -----------------------------------------------------------------
class Reason(str, Enum):
    NOT_BALANCED = "NotBalanced"
    H_NOT_CONSTANT_ZERO = "HNotConstantZero"
    COUNT_MISMATCH = "CountMismatch"
    WITNESS_FOUND = "WitnessFound"
    ALL_TESTS_PASSED = "AllTestsPassed"
    INTERSECTION_VIOLATED = "IntersectionViolated"


_WITNESS_REASONS = (Reason.WITNESS_FOUND, Reason.INTERSECTION_VIOLATED)


@dataclass(frozen=True)
class Verdict:
    answer: bool
    reason: Reason
    witness: Optional[int] = None
    witness_pair: Optional[ImplicantPair] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.witness is not None and self.reason not in _WITNESS_REASONS:
            raise DualityError(f"reason {self.reason.value} carries no witness")

    def to_dict(self) -> dict:
        pair = None
        if self.witness_pair is not None:
            pair = [list(self.witness_pair[0]), list(self.witness_pair[1])]
        return {
            "answer": self.answer,
            "reason": self.reason.value,
            "witness": self.witness,
            "witness_pair": pair,
        }
