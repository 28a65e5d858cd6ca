"""Seeded random streams for measurements and corpus generation.

Every stream is a NumPy ``Generator`` over ``PCG64``, whose output for a
given seed is stable across platforms and NumPy releases. Independent runs
(bench instances, repeated seeds) get their own stream through
:func:`derive_seed`:

    derived = first 8 bytes, little-endian, of sha256(str(base_seed ^ index))
"""

from __future__ import annotations

import hashlib

import numpy as np

from src.errors import DualityError

SEED_MASK = (1 << 64) - 1


def _check_seed(seed: int) -> int:
    if not 0 <= seed <= SEED_MASK:
        raise DualityError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(_check_seed(seed)))


def derive_seed(base_seed: int, index: int) -> int:
    """Seed for run ``index`` split off ``base_seed``."""
    mixed = _check_seed(base_seed) ^ index
    digest = hashlib.sha256(str(mixed).encode("ascii")).digest()
    return int.from_bytes(digest[:8], "little")


def run_rng(base_seed: int, index: int) -> np.random.Generator:
    return make_rng(derive_seed(base_seed, index))
