"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail
line per criterion. The full module takes a few minutes.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from realopt.benchmarks import build_levy_sr
from realopt.engine import (
    RealParams,
    VisibleSpotList,
    learning_efficiency,
    perturbation_amplitude,
    run,
    scaled_learning_efficiency,
)
from realopt.engineering import brute_force_clutch
from realopt.harness import (
    ExperimentConfig,
    friedman_rank,
    load_rank_table,
    paper_table_path,
    resolve_problem,
    run_experiment,
)
from realopt.problem import Problem
from realopt.rng import seeded_stream
from realopt.rotation import RotationMatrix, generate_orthogonal_matrix, normalize, rotate
from realopt.space import SearchSpace


def report(number, detail, started):
    print(f"\n[acceptance] criterion {number}: PASS  {detail} ({time.time() - started:.1f}s)")


def test_c01_orthogonality_and_rotation_properties():
    started = time.time()
    worst_dev = 0.0
    worst_norm = 0.0
    for n in (2, 10, 30):
        rng = seeded_stream(100 + n, "acceptance-orth")
        identity = RotationMatrix(np.eye(n))
        space = SearchSpace(np.full(n, -7.0), np.full(n, 11.0))
        for i in range(100):
            matrix = generate_orthogonal_matrix(n, rng)
            dev = np.max(np.abs(matrix.entries.T @ matrix.entries - np.eye(n)))
            worst_dev = max(worst_dev, dev)
            z = rng.standard_normal(n)
            norm_err = abs(np.linalg.norm(matrix.entries @ z) - np.linalg.norm(z))
            worst_norm = max(worst_norm, norm_err / np.linalg.norm(z))
            if i % 10 == 0:
                x = space.sample(rng)
                c = space.sample(rng)
                assert np.array_equal(rotate(x, identity, c, space), x)
    assert worst_dev < 1e-10
    assert worst_norm < 1e-9
    report(1, f"300 matrices: max|M'M-I|={worst_dev:.2e}, norm err={worst_norm:.2e}, "
              "identity rotation exact", started)


def test_c02_schedule_analytics():
    started = time.time()
    assert learning_efficiency(500, 1000, 6.0) == 0.5
    assert scaled_learning_efficiency(500, 1000, 6.0) == 0.5
    for k in (1, 13, 250, 499):
        assert abs(learning_efficiency(500 + k, 1000, 6.0)
                   + learning_efficiency(500 - k, 1000, 6.0) - 1.0) < 1e-12
        assert abs(scaled_learning_efficiency(500 + k, 1000, 6.0)
                   + scaled_learning_efficiency(500 - k, 1000, 6.0) - 1.0) < 1e-12
    # amplitude endpoints: efficiency 0 and 1 give the two amplitudes
    assert perturbation_amplitude(0, 1000, 6.0, 316.0, 1e-40) == pytest.approx(316.0)
    assert perturbation_amplitude(1000, 1000, 6.0, 316.0, 1e-40) == pytest.approx(1e-40, abs=1e-30)
    space = SearchSpace(np.full(10, -100.0), np.full(10, 100.0))
    assert space.span_norm() == pytest.approx(632.4555320336759, abs=1e-9)
    report(2, "midpoint exact, symmetry <=1e-12, amplitude endpoints, diagonal norm", started)


def test_c03_nfe_accounting():
    started = time.time()
    total_iters, agents = 100, 20
    problem = resolve_problem("F1", dimension=30)
    counts = []
    for seed in range(10):
        record = run(problem, RealParams(n_agents=agents, iterations=total_iters, seed=seed))
        assert record.iterations_used == total_iters
        assert 2 * total_iters * agents <= record.nfe <= 3 * total_iters * agents
        counts.append(record.nfe)
    ratio = np.mean(counts) / (total_iters * agents)
    assert 2.4 <= ratio <= 2.6
    report(3, f"per-run NFE within [2,3]*T*n, mean ratio {ratio:.4f}", started)


def test_c04_visible_spot_oracle_equivalence():
    started = time.time()
    rng = np.random.default_rng(2_024)
    for trial in range(1000):
        capacity = int(rng.integers(1, 11))
        length = int(rng.integers(1, 201))
        values = rng.integers(0, 40, size=length).astype(float)
        archive = VisibleSpotList(capacity)
        for i, value in enumerate(values):
            archive.offer(np.array([float(i)]), value)
        expected_idx = sorted(range(length), key=lambda i: (values[i], i))[:capacity]
        expected = sorted(values[i] for i in expected_idx)
        assert sorted(archive.values) == expected
    report(4, "1000 randomized offer logs match the k-smallest oracle exactly", started)


def test_c05_sphere_median_below_1e8():
    started = time.time()
    config = ExperimentConfig(problem="F1", dimension=30, reps=10, seed_base=0,
                              params=RealParams())
    _, records = run_experiment(config)
    for record in records:
        assert np.all(np.diff(record.best_per_iter) <= 0)
    finals = [r.final_best[1] for r in records]
    median = float(np.median(finals))
    assert median < 1e-8
    report(5, f"median final best {median:.2e} over 10 seeds, all series monotone", started)


def test_c06_six_hump_camel_mean():
    started = time.time()
    config = ExperimentConfig(problem="F16", reps=10, seed_base=0, params=RealParams())
    summary, _ = run_experiment(config)
    assert summary.mean == pytest.approx(-1.0316285, abs=1e-5)
    report(6, f"mean {summary.mean:.9f} within 1e-5 of -1.0316285", started)


def test_c07_clutch_brake_oracle_and_optimizer():
    started = time.time()
    best_x, best_f = brute_force_clutch()
    assert best_f == pytest.approx(0.313657, abs=1e-6)
    config = ExperimentConfig(problem="B01", reps=30, seed_base=0,
                              params=RealParams(), nfe_budget=1200)
    summary, records = run_experiment(config)
    hits = sum(abs(r.final_best[1] - 0.313657) < 1e-6 for r in records)
    detail = (f"oracle {best_f:.6f}; optimizer at ~1200 evaluations: {hits}/30 runs "
              f"at the optimum, best={summary.best:.6f}, worst={summary.worst:.6f}")
    # the published claim: every run reaches 0.313657 with zero deviation
    assert summary.best == pytest.approx(0.313657, abs=1e-6), detail
    assert summary.worst == pytest.approx(0.313657, abs=1e-6), detail
    assert summary.std == 0.0, detail
    report(7, detail, started)


def test_c08_speed_reducer_best():
    started = time.time()
    config = ExperimentConfig(problem="B07", reps=30, seed_base=0,
                              params=RealParams(), nfe_budget=32000)
    summary, _ = run_experiment(config)
    assert summary.best == pytest.approx(2994.4711, abs=1e-2)
    report(8, f"best over 30 seeds {summary.best:.5f} within 1e-2 of 2994.4711 "
              f"(mean {summary.mean:.4f}, mean NFE {summary.mean_nfe:.0f})", started)


def test_c09_shifted_rotated_levy():
    started = time.time()
    instance = build_levy_sr(10, seed=0)
    rng = seeded_stream(1, "acceptance-levy-floor")
    points = -100.0 + 200.0 * rng.random((100_000, 10))
    for x in points:
        assert instance.value(x) >= 900.0
    config = ExperimentConfig(
        problem="LEVY-SR-10", reps=30, seed_base=0,
        params=RealParams(iterations=500, term_tol=1e-8))
    _, records = run_experiment(config)
    gaps = [r.final_best[1] - 900.0 for r in records]
    mean_gap = float(np.mean(gaps))
    assert mean_gap < 2.0
    report(9, f"floor holds on 1e5 points; mean(best-900)={mean_gap:.5f} over 30 seeds", started)


def test_c10_friedman_machinery():
    started = time.time()
    total_order = friedman_rank(np.array([[1.0, 2.0], [0.1, 0.2], [5.0, 6.0]]))
    assert np.array_equal(total_order, [1.0, 2.0])
    tie_case = friedman_rank(np.array([[1.0, 1.0, 2.0]]))
    assert np.array_equal(tie_case, [1.5, 1.5, 3.0])
    _, algorithms, matrix = load_rank_table(paper_table_path("cec2014_ave.csv"))
    ranks = dict(zip(algorithms, friedman_rank(matrix)))
    assert ranks["REAL"] == pytest.approx(2.2167, abs=0.05)
    report(10, f"synthetic cases exact; transcribed table lead rank {ranks['REAL']:.4f}", started)


def test_c11_determinism_across_invocations(tmp_path):
    started = time.time()
    payloads = []
    for name in ("one", "two"):
        out = tmp_path / name
        result = subprocess.run(
            [sys.executable, "-m", "realopt", "run", "--problem", "F16",
             "--reps", "3", "--seed-base", "11",
             "--set", "params.iterations=120", "--set", "params.n_agents=10",
             "--out", str(out)],
            capture_output=True, text=True, timeout=600)
        assert result.returncode == 0, result.stderr
        payloads.append((out / "summary.json").read_bytes())
    assert payloads[0] == payloads[1]
    parsed = json.loads(payloads[0])
    assert parsed["config"]["seed_base"] == 11
    report(11, "two CLI invocations produced byte-identical summary JSON", started)
