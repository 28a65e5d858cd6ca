"""Instance generators for tests and benchmarks."""

from __future__ import annotations

import logging
from typing import List, Tuple

import numpy as np

from src.errors import DualityError
from src.logic.classical import (
    dnf_from_truth_table,
    dual_of,
    enumerate_monotone,
    is_self_dual_brute,
)
from src.logic.dnf import (
    MonotoneDNF,
    dnf_oracle,
    generate_majority_phi,
    minimize_implicants,
)

logger = logging.getLogger(__name__)

# Recorded with every bench run so corpora can be regenerated.
GENERATOR_PARAMS = {
    "implicant_count": "uniform integer in [1, 2n]",
    "implicant_size": "uniform integer in [1, n]",
    "post_processing": "superset implicants stripped",
}


def random_antichain(n: int, rng: np.random.Generator) -> MonotoneDNF:
    """Random prime monotone DNF; never constant since every implicant is non-empty."""
    count = int(rng.integers(1, 2 * n + 1))
    implicants = []
    for _ in range(count):
        size = int(rng.integers(1, n + 1))
        chosen = rng.choice(n, size=size, replace=False) + 1
        implicants.append(tuple(sorted(int(i) for i in chosen)))
    return MonotoneDNF(n, tuple(minimize_implicants(implicants)))


def random_pair(
    n: int, rng: np.random.Generator, dual_probability: float = 0.5
) -> Tuple[MonotoneDNF, MonotoneDNF]:
    """``(f, g)`` where ``g`` is the true dual of ``f`` with the given probability."""
    f = random_antichain(n, rng)
    if rng.random() < dual_probability:
        return f, dual_of(f)
    return f, random_antichain(n, rng)


def planted_violation(n: int, rng: np.random.Generator) -> MonotoneDNF:
    """Majority on ``m`` variables minus one random implicant.

    ``m = n`` for odd ``n`` and ``n - 1`` otherwise (variable ``n`` unused).
    The only inputs with ``f(x) = f(~x)`` are those whose first ``m`` bits
    equal the removed implicant or its complement: 2 inputs for odd ``n``,
    4 for even ``n``.
    """
    if n < 3:
        raise DualityError(f"planted instances need n >= 3, got {n}")
    m = n if n % 2 else n - 1
    implicants = list(generate_majority_phi(m).implicants)
    removed = implicants.pop(int(rng.integers(0, len(implicants))))
    logger.debug("Planted violation on n=%d by removing %s", n, removed)
    return MonotoneDNF(n, tuple(implicants))


def enumerate_self_dual(n: int) -> List[MonotoneDNF]:
    """Every self-dual prime monotone function on ``n`` variables."""
    found = []
    for table in enumerate_monotone(n):
        if table.bits[0] or not table.bits[-1]:
            continue  # constants
        f = dnf_from_truth_table(table)
        if is_self_dual_brute(dnf_oracle(f)).answer:
            found.append(f)
    return found
