import math

import numpy as np
import pytest

from src.errors import ArityMismatchError, DualityError, WidthTooSmallError
from src.logic.dnf import (
    BooleanOracle,
    MonotoneDNF,
    build_h_oracle,
    dnf_oracle,
)
from src.logic.corpus import random_antichain
from src.logic.rng import make_rng
from src.logic.subroutines import (
    SimConfig,
    accepted_counting_outcomes,
    analytic_dj_distribution,
    default_counting_width,
    deutsch_jozsa,
    grover_search_report,
    grover_search_unknown,
    quantum_counting,
    run_budget,
)


def _and(n):
    return MonotoneDNF(n, (tuple(range(1, n + 1)),))


def _or(n):
    return MonotoneDNF(n, tuple((i,) for i in range(1, n + 1)))


def _dictator(n):
    return MonotoneDNF(n, ((1,),))


@pytest.mark.parametrize("n", [2, 5, 8])
def test_dj_returns_zero_for_dual_pair_h(n):
    h = build_h_oracle(_and(n), _or(n))
    rng = make_rng(n)
    assert all(deutsch_jozsa(h, n, rng) == 0 for _ in range(1000))


@pytest.mark.parametrize("n", [2, 5, 8])
def test_dj_never_zero_for_balanced(n):
    f = dnf_oracle(_dictator(n))
    rng = make_rng(n)
    outcomes = [deutsch_jozsa(f, n, rng) for _ in range(1000)]
    assert 0 not in outcomes
    # a dictator on x1 sends all weight to z = 1
    assert set(outcomes) == {1}
    assert f.applications == 1000


def test_dj_checks_arity(phi3):
    with pytest.raises(ArityMismatchError):
        deutsch_jozsa(dnf_oracle(phi3), 4, make_rng(0))


def test_analytic_dj_distribution():
    constant = analytic_dj_distribution(np.zeros(8))
    assert constant[0] == pytest.approx(1.0)
    parity = analytic_dj_distribution([0, 1, 1, 0])
    assert list(parity) == pytest.approx([0, 0, 0, 1])
    majority = analytic_dj_distribution(dnf_oracle(MonotoneDNF(3, ((1, 2), (1, 3), (2, 3)))).evaluate_all())
    assert majority[0] == pytest.approx(0.0)
    assert majority.sum() == pytest.approx(1.0)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_dj_outcomes_match_analytic_distribution(n):
    f = random_antichain(n, make_rng(70 + n))
    oracle = dnf_oracle(f)
    expected = analytic_dj_distribution(oracle.truth_vector())
    rng = make_rng(n)
    runs = 10_000
    outcomes = [deutsch_jozsa(oracle, n, rng) for _ in range(runs)]
    observed = np.bincount(outcomes, minlength=1 << n) / runs
    distance = 0.5 * np.abs(observed - expected).sum()
    # sampling noise grows with the number of outcomes
    assert distance <= math.sqrt((1 << n) / runs)


def test_dj_on_two_variable_and_hits_zero_a_quarter_of_the_time():
    oracle = dnf_oracle(_and(2))
    assert analytic_dj_distribution(oracle.truth_vector())[0] == pytest.approx(0.25)
    rng = make_rng(12)
    runs = 4000
    zeros = sum(deutsch_jozsa(oracle, 2, rng) == 0 for _ in range(runs))
    assert abs(zeros - runs / 4) <= 3 * math.sqrt(runs * 0.25 * 0.75)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_counting_exact_on_balanced_predicates(n):
    t = math.ceil(n / 2)
    accepted = accepted_counting_outcomes(t)
    predicate = dnf_oracle(_dictator(n))
    rng = make_rng(100 + n)
    for _ in range(1000):
        estimate = quantum_counting(predicate, n, t, rng)
        assert estimate.y in accepted
        assert abs(estimate.m_hat - 2 ** (n - 1)) < 1e-9
        assert estimate.applications == 2 ** t - 1


def test_counting_strict_outcome_frequency():
    n, t = 4, 2
    predicate = dnf_oracle(_dictator(n))
    rng = make_rng(5)
    (principal,) = accepted_counting_outcomes(t, strict=True)
    hits = sum(quantum_counting(predicate, n, t, rng).y == principal for _ in range(2000))
    assert abs(hits / 2000 - 0.5) <= 0.05


def test_counting_extremes():
    rng = make_rng(1)
    assert quantum_counting(BooleanOracle.constant(3, 0), 3, 3, rng).y == 0
    full = quantum_counting(BooleanOracle.constant(3, 1), 3, 3, rng)
    assert full.y == 4
    assert full.m_hat == pytest.approx(8.0)


def test_counting_width():
    assert default_counting_width(2) == 2
    assert default_counting_width(5) == 3
    assert accepted_counting_outcomes(4) == (4, 12)
    with pytest.raises(WidthTooSmallError):
        quantum_counting(BooleanOracle.constant(2, 0), 2, 1, make_rng(0))


def test_grover_finds_single_marked_input():
    bits = np.zeros(64, dtype=np.uint8)
    bits[37] = 1
    predicate = BooleanOracle.from_table(bits)
    report = grover_search_report(predicate, 6, SimConfig(), make_rng(3))
    assert report.witness == 37
    assert report.candidates[-1] == 37
    assert report.verifications == report.attempts
    assert report.queries == report.iterations + report.verifications
    assert predicate.applications == report.iterations
    # one classical query per verified candidate, plus the one-off truth vector
    materialised = predicate.size if predicate.applications else 0
    assert predicate.query_count - materialised == report.verifications


def test_grover_without_solutions_spends_bounded_budget():
    predicate = BooleanOracle.constant(5, 0)
    config = SimConfig(restarts=3)
    report = grover_search_report(predicate, 5, config, make_rng(0))
    assert report.witness is None
    assert report.runs == 3
    assert report.queries <= 3 * run_budget(5)
    assert grover_search_unknown(predicate, 5, config, make_rng(0)) is None


def test_run_budget():
    assert run_budget(4) == 2 + 2 * 4
    assert run_budget(5) == 2 + 2 * 6


def test_sim_config_validation():
    assert SimConfig().to_dict() == {
        "seed": 0,
        "lambda": 1.2,
        "R": 20,
        "dj_repetitions": 1,
        "strict": False,
    }
    with pytest.raises(DualityError):
        SimConfig(growth=1.0)
    with pytest.raises(DualityError):
        SimConfig(restarts=0)
    with pytest.raises(DualityError):
        SimConfig(dj_repetitions=0)
    with pytest.raises(WidthTooSmallError):
        SimConfig(t=1)
