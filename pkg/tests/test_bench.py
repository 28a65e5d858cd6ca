import pandas as pd
import pytest

from src.errors import ArityTooLargeError, DualityError
from src.logic.bench import (
    CSV_COLUMNS,
    GROVER_QUERY_FACTOR,
    plan_tasks,
    run_bench,
    summarize,
    write_csv,
)


def test_plan_tasks_orders_and_seeds():
    tasks = plan_tasks(3, 4, 2, seed=5)
    assert [(t.n, t.instance_id) for t in tasks] == [(3, 0), (3, 1), (4, 0), (4, 1)]
    assert len({t.seed for t in tasks}) == 4
    assert plan_tasks(3, 4, 2, seed=5) == tasks


@pytest.mark.parametrize(
    "args, error",
    [
        ((5, 4, 1, 0, "random"), DualityError),
        ((2, 4, 0, 0, "random"), DualityError),
        ((2, 4, 1, 0, "planted"), DualityError),
        ((2, 4, 1, 0, "other"), DualityError),
        ((2, 21, 1, 0, "random"), ArityTooLargeError),
        ((2, 18, 1, 0, "random"), ArityTooLargeError),
    ],
)
def test_plan_tasks_validation(args, error):
    with pytest.raises(error):
        plan_tasks(*args)


def test_plan_tasks_checks_qubit_budget_up_front(monkeypatch):
    monkeypatch.setattr("src.config.MAX_QUBITS", 10)
    # 7 variables plus a 4-qubit counting register
    with pytest.raises(ArityTooLargeError):
        plan_tasks(3, 7, 1, 0, "random")
    assert len(plan_tasks(3, 6, 1, 0, "random")) == 4
    assert len(plan_tasks(3, 10, 1, 0, "planted")) == 8
    with pytest.raises(ArityTooLargeError):
        plan_tasks(3, 11, 1, 0, "planted")
    with pytest.raises(ArityTooLargeError):
        run_bench(3, 7, 1, seed=0, workers=1)


def test_random_bench_agrees_with_brute_force():
    df = run_bench(2, 6, 8, seed=1, workers=2)
    assert list(df.columns) == CSV_COLUMNS
    assert len(df) == 5 * 8
    assert df["agree"].all()
    assert (df["quantum_answer"] == df["classical_answer"]).all()
    assert (df["dj_queries"] >= 1).all()


def test_bench_is_reproducible():
    first = run_bench(3, 5, 4, seed=9, workers=1)
    second = run_bench(3, 5, 4, seed=9, workers=3)
    pd.testing.assert_frame_equal(first, second)


def test_planted_queries_scale_with_square_root():
    df = run_bench(6, 14, 10, seed=3, family="planted", workers=4)
    assert not df["quantum_answer"].any()
    assert df["agree"].all()
    assert (df["counting_queries"] == 0).all()
    summary = summarize(df)
    for _, row in summary.iterrows():
        assert row["query_bound"] == pytest.approx(GROVER_QUERY_FACTOR * 2 ** (row["n"] / 2))
    assert summary["within_bound"].all()


def test_summarize_and_write_csv(tmp_path):
    df = run_bench(3, 4, 3, seed=0, workers=1)
    summary = summarize(df)
    assert list(summary["n"]) == [3, 4]
    assert list(summary["instances"]) == [3, 3]

    path = tmp_path / "bench.csv"
    write_csv(df, path)
    loaded = pd.read_csv(path)
    assert list(loaded.columns) == CSV_COLUMNS
    assert len(loaded) == 6
