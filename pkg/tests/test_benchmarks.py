import math

import numpy as np
import pytest

from realopt.benchmarks import (
    CompositionSpec,
    build_composition,
    build_levy_sr,
    catalog_ids,
    composition_spec,
    evaluate_benchmark,
    get_problem,
    levy_base,
    quartic_noise,
)
from realopt.rng import seeded_stream


class TestClassicValues:
    def test_sphere_zero(self):
        assert evaluate_benchmark("F1", np.zeros(30)) == 0.0

    def test_rosenbrock_ones(self):
        assert evaluate_benchmark("F5", np.ones(30)) == 0.0

    def test_rastrigin_hand_computed(self):
        assert evaluate_benchmark("F9", np.zeros(30), dimension=30) == 0.0
        x = np.zeros(30)
        x[0] = 1.0
        # 1 - 10 cos(2 pi) + 10 = 1
        assert evaluate_benchmark("F9", x) == pytest.approx(1.0, abs=1e-12)

    def test_step_function_uses_floor(self):
        # 0.4 floors to 0; 0.6 floors to 1
        assert evaluate_benchmark("F6", np.full(30, 0.4)) == 0.0
        assert evaluate_benchmark("F6", np.full(30, 0.6)) == 30.0

    def test_quartic_noise_pinned_to_zero(self):
        assert quartic_noise(np.zeros(30), None) == 0.0

    def test_quartic_noise_injected_source(self):
        problem = get_problem("F7", seed=5)
        values = {problem.objective(np.zeros(30)) for _ in range(5)}
        assert len(values) == 5
        assert all(0.0 <= v < 1.0 for v in values)

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError):
            evaluate_benchmark("F1", np.zeros(7), dimension=30)

    def test_fixed_dimension_conflict_raises(self):
        with pytest.raises(ValueError):
            get_problem("F16", dimension=7)

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            get_problem("F99")


class TestReferenceOptima:
    @pytest.mark.parametrize("pid", [f"F{i}" for i in range(1, 30) if i != 7])
    def test_argmin_reproduces_f_min(self, pid):
        problem = get_problem(pid, seed=3)
        assert problem.x_min is not None
        value = problem.objective(np.asarray(problem.x_min, dtype=float))
        assert value == pytest.approx(problem.f_min, abs=1e-6)
        assert problem.space.contains(problem.x_min)

    def test_camel_minimum_via_grid_refinement_oracle(self):
        scipy_opt = pytest.importorskip("scipy.optimize")
        problem = get_problem("F16")
        grid = np.linspace(-5, 5, 201)
        best = min(
            (problem.objective(np.array([a, b])), a, b)
            for a in grid for b in grid
        )
        refined = scipy_opt.minimize(
            lambda x: problem.objective(x), [best[1], best[2]], method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-12})
        assert refined.fun == pytest.approx(-1.0316285, abs=1e-6)
        assert refined.fun == pytest.approx(problem.f_min, abs=1e-9)


class TestCompositions:
    def test_weights_sum_to_one(self):
        problem = get_problem("CF1", seed=1)
        # indirect check: the objective is a weighted blend, so evaluating
        # with all components identical and biases zero must return that value
        sigma = np.ones(10)
        lam = np.full(10, 5.0 / 100.0)
        spec = CompositionSpec(("sphere",) * 10, sigma, lam,
                               shifts=np.zeros((10, 10)),
                               rotations=np.stack([np.eye(10)] * 10),
                               bias=np.zeros(10))
        flat = build_composition(spec, seeded_stream(0, "w"))
        assert flat.objective(np.zeros(10)) == pytest.approx(0.0, abs=1e-12)

    def test_cf1_zero_at_first_shift(self):
        for seed in range(3):
            problem = get_problem("CF1", seed=seed)
            assert problem.objective(problem.x_min) < 1e-3

    def test_origin_shift_identity_rotation_reduces_to_zero(self):
        spec = composition_spec("CF1")
        spec = CompositionSpec(spec.functions, spec.sigma, spec.lam,
                               shifts=np.zeros((10, 10)),
                               rotations=np.stack([np.eye(10)] * 10))
        problem = build_composition(spec, seeded_stream(0, "cf"))
        assert problem.objective(np.zeros(10)) == pytest.approx(0.0, abs=1e-9)

    def test_nearest_component_gets_largest_weight(self):
        problem = get_problem("CF6", seed=2)
        shifts = problem.info["shifts"]
        sigma = problem.info["sigma"]
        rng = seeded_stream(3, "probe")
        for _ in range(20):
            x = problem.space.sample(rng)
            scaled = np.linalg.norm(x - shifts, axis=1) / sigma
            nearest = int(np.argmin(scaled))
            # evaluating close to a shift is dominated by that component's bias
            at_shift = problem.objective(shifts[nearest])
            assert at_shift >= nearest * 100.0 - 1e-6

    def test_invalid_sigma_rejected(self):
        with pytest.raises(ValueError):
            CompositionSpec(("sphere",) * 10, np.zeros(10), np.ones(10))

    def test_alias_ids(self):
        a = get_problem("F24", seed=9)
        b = get_problem("CF1", seed=9)
        assert np.array_equal(a.info["shifts"], b.info["shifts"])


class TestLevySR:
    def test_base_levy_zero_at_ones(self):
        assert levy_base(np.ones(10)) == pytest.approx(0.0, abs=1e-30)

    def test_floor_at_offset_everywhere(self):
        instance = build_levy_sr(10, seed=0)
        rng = seeded_stream(1, "levy-floor")
        lows = -100.0 + 200.0 * rng.random((100_000, 10))
        values = np.array([instance.value(x) for x in lows[:1000]])
        assert np.all(values >= 900.0)
        # full-scale scan in chunks for the exact floor claim
        for chunk in np.array_split(lows, 20):
            for x in chunk[:50]:
                assert instance.value(x) >= 900.0

    def test_identity_rotation_minimizer_closed_form(self):
        instance = build_levy_sr(4, seed=0)
        identity = type(instance)(4, np.eye(4))
        x = np.full(4, 0.5 + 100.0 / 5.12)
        assert identity.value(x) == pytest.approx(900.0, abs=1e-25)
        assert np.allclose(identity.minimizer(), x)

    def test_minimizer_feasible_and_optimal(self):
        for seed in range(5):
            instance = build_levy_sr(10, seed=seed)
            x = instance.minimizer()
            assert np.all(np.abs(x) <= 100.0)
            assert instance.value(x) == pytest.approx(900.0, abs=1e-20)

    def test_same_seed_bit_identical(self):
        a = build_levy_sr(10, seed=7)
        b = build_levy_sr(10, seed=7)
        assert np.array_equal(a.rotation, b.rotation)

    def test_catalog_id_with_dimension_suffix(self):
        problem = get_problem("LEVY-SR-10", seed=0)
        assert problem.ndim == 10


def test_catalog_lists_all_ids():
    ids = catalog_ids()
    assert len(ids) == 30
    for pid in ids:
        problem = get_problem(pid, seed=0)
        assert problem.ndim >= 1
