import pytest

from src.errors import DualityError
from src.logic.classical import count_satisfying, is_dual_pair_brute, is_self_dual_brute
from src.logic.corpus import (
    GENERATOR_PARAMS,
    enumerate_self_dual,
    planted_violation,
    random_antichain,
    random_pair,
)
from src.logic.dnf import build_violation_oracle, dnf_oracle, is_prime_antichain
from src.logic.rng import SEED_MASK, derive_seed, make_rng, run_rng


def test_random_antichains_are_prime_and_non_constant():
    rng = make_rng(1)
    for _ in range(200):
        n = int(rng.integers(1, 11))
        f = random_antichain(n, rng)
        assert f.num_vars == n
        assert not f.is_constant
        assert is_prime_antichain(f)
        assert len(f) <= 2 * n


def test_random_pair_plants_duals():
    rng = make_rng(4)
    duals = 0
    for _ in range(100):
        f, g = random_pair(5, rng, dual_probability=1.0)
        duals += is_dual_pair_brute(dnf_oracle(f), dnf_oracle(g)).answer
    assert duals == 100


@pytest.mark.parametrize("n, solutions", [(3, 2), (4, 4), (7, 2), (8, 4)])
def test_planted_violation_solution_count(n, solutions):
    f = planted_violation(n, make_rng(n))
    assert not is_self_dual_brute(dnf_oracle(f)).answer
    assert count_satisfying(build_violation_oracle(f)) == solutions


def test_planted_violation_needs_three_variables():
    with pytest.raises(DualityError):
        planted_violation(2, make_rng(0))


def test_enumerate_self_dual_small():
    assert {f.implicants for f in enumerate_self_dual(2)} == {((1,),), ((2,),)}
    assert len(enumerate_self_dual(4)) == 12


def test_generator_params_recorded():
    assert set(GENERATOR_PARAMS) == {"implicant_count", "implicant_size", "post_processing"}


def test_derive_seed_is_stable_and_distinct():
    seeds = [derive_seed(7, i) for i in range(100)]
    assert len(set(seeds)) == 100
    assert all(0 <= s <= SEED_MASK for s in seeds)
    assert derive_seed(7, 3) == derive_seed(7, 3)
    assert run_rng(7, 3).random() == make_rng(derive_seed(7, 3)).random()


def test_invalid_seed_rejected():
    with pytest.raises(DualityError):
        make_rng(-1)
    with pytest.raises(DualityError):
        derive_seed(1 << 64, 0)
