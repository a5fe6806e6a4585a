import json
import math

import numpy as np
import pytest

from realopt.engineering import (
    NFE_BUDGETS,
    PenaltyPolicy,
    brute_force_clutch,
    engineering_ids,
    evaluate_raw,
    get_problem,
    gripper_force_extrema,
    penalized,
)
from realopt.harness import paper_table_path


@pytest.fixture(scope="module")
def reference():
    with paper_table_path("engineering_reference.json").open() as handle:
        return json.load(handle)


class TestClutch:
    def test_reference_point_values(self):
        objective, g = evaluate_raw("B01", [70, 90, 1, 820, 3])
        assert objective == pytest.approx(0.313657, abs=1e-6)
        assert g[1] == pytest.approx(24.0, abs=1e-9)
        assert g[4] == pytest.approx(7.895, abs=1e-3)

    def test_published_constraint_column(self):
        # remaining values of the comparison table for the same point
        _, g = evaluate_raw("B01", [70, 90, 1, 820, 3])
        expected = [0.0, 24.0, 0.919, 9.828, 7.895, 0.443, 38.913, 14.557]
        assert np.allclose(g, expected, atol=2e-3)

    def test_alternative_published_point(self):
        _, g = evaluate_raw("B01", [70, 90, 1, 984, 3])
        assert g[5] == pytest.approx(2.869, abs=2e-3)
        assert g[6] == pytest.approx(58.695, abs=2e-3)
        assert g[7] == pytest.approx(12.131, abs=2e-3)

    def test_brute_force_finds_published_best(self):
        best_x, best_f = brute_force_clutch()
        assert best_f == pytest.approx(0.313657, abs=1e-6)
        assert best_x[0] == 70 and best_x[1] == 90 and best_x[2] == 1 and best_x[4] == 3
        problem = get_problem("B01")
        assert problem.is_feasible(best_x)

    def test_oracle_feasible_points_satisfy_constraints(self):
        problem = get_problem("B01")
        best_x, best_f = brute_force_clutch()
        objective, g = problem.evaluate_raw(best_x)
        assert objective == pytest.approx(best_f, abs=1e-12)
        assert np.all(g >= 0)


class TestGripper:
    def test_reference_objective(self, reference):
        x = np.array(reference["B02"]["x"])
        fmax, fmin = gripper_force_extrema(x)
        assert fmax - fmin == pytest.approx(4.97437160, abs=5e-3)
        assert fmax >= fmin

    def test_degenerate_geometry_is_infeasible(self):
        # a = b with e = 0 and a long link: acos argument leaves [-1, 1]
        x = np.array([20.0, 20.0, 150.0, 0.0, 50.0, 300.0, 2.0])
        fmax, fmin = gripper_force_extrema(x)
        assert math.isnan(fmax) and math.isnan(fmin)
        assert penalized("B02", x) == math.inf

    def test_reference_constraints(self, reference):
        x = np.array(reference["B02"]["x"])
        _, g = evaluate_raw("B02", x)
        expected = [41.564, 8.436, 45.558, 4.442, 57812.122, 2340.496,
                    45.0, 29.599, 127.373, 135.273]
        # published x is rounded to three decimals; tight constraints amplify that
        assert np.allclose(g, expected, rtol=5e-3, atol=0.02)

    def test_printed_denominator_selectable(self):
        x = np.array([150.0, 131.323, 186.550, 17.481, 103.224, 145.000, 2.383])
        default = gripper_force_extrema(x, denominator="2c")
        printed = gripper_force_extrema(x, denominator="zc")
        assert default != printed


class TestBearing:
    def test_reference_capacity(self, reference):
        info = reference["B03"]
        objective, g = evaluate_raw("B03", info["x"])
        assert objective == pytest.approx(info["objective"], rel=1e-2)

    def test_le_constraint_convention(self, reference):
        # the ball-size cap is the one <= 0 constraint; satisfied when negative
        _, g = evaluate_raw("B03", reference["B03"]["x"])
        assert g[3] < 0
        problem = get_problem("B03")
        assert problem.constraints[3].kind == "le"
        assert problem.constraints[3].violation(g[3], 0.0) == 0.0

    def test_maximization_enters_engine_negated(self):
        problem = get_problem("B03")
        x = np.array([126.0, 18.5, 8.0, 0.53, 0.53, 0.45, 0.65, 0.3, 0.05, 0.6])
        assert problem.is_feasible(x)
        raw, _ = problem.evaluate_raw(x)
        engine_value = problem.penalized(x)
        assert engine_value < 0
        assert problem.display_value(engine_value) == pytest.approx(raw, rel=1e-12)


class TestThrustBearing:
    def test_reference_objective(self, reference):
        info = reference["B04"]
        objective, g = evaluate_raw("B04", info["x"])
        assert objective == pytest.approx(info["objective"], rel=1e-2)

    def test_reference_film_and_flow_margins(self, reference):
        # printed x is rounded, and these margins are sensitive to it
        _, g = evaluate_raw("B04", reference["B04"]["x"])
        assert g[3] == pytest.approx(3.244e-4, abs=5e-6)   # film thickness margin
        assert g[5] == pytest.approx(8.334e-4, abs=5e-6)   # flow margin
        assert g[4] == pytest.approx(0.567, abs=2e-3)


class TestBelleville:
    def test_reference_objective(self, reference):
        info = reference["B05"]
        objective, _ = evaluate_raw("B05", info["x"])
        assert objective == pytest.approx(info["objective"], rel=1e-2)

    def test_reference_geometric_margins(self, reference):
        _, g = evaluate_raw("B05", reference["B05"]["x"])
        assert g[3] == pytest.approx(1.596, abs=2e-3)
        assert g[5] == pytest.approx(1.983, abs=2e-3)
        assert g[6] == pytest.approx(0.199, abs=2e-3)

    def test_deflection_table_rows(self):
        from realopt.engineering import _deflection_factor
        assert _deflection_factor(1.45) == 0.85   # midpoint rounds up in a
        assert _deflection_factor(1.3) == 1.0
        assert _deflection_factor(1.4) == 1.0
        assert _deflection_factor(2.8) == 0.5
        assert _deflection_factor(3.7) == 0.5
        assert _deflection_factor(2.0) == 0.60


class TestPulley:
    def test_reference_objective(self, reference):
        info = reference["B06"]
        objective, _ = evaluate_raw("B06", info["x"])
        assert objective == pytest.approx(info["objective"], rel=1e-2)

    def test_reference_tension_and_power(self, reference):
        _, values = evaluate_raw("B06", reference["B06"]["x"])
        h, g = values[:3], values[3:]
        assert np.allclose(h, 0.0, atol=2e-3)
        assert np.allclose(g[:4], [0.989, 0.999, 1.009, 1.019], atol=2e-3)
        assert g[4] == pytest.approx(705.658, abs=0.5)

    def test_equality_residuals_within_tolerance_at_reference(self, reference):
        problem = get_problem("B06")
        policy = PenaltyPolicy(eq_tol=2e-3)
        assert problem.is_feasible(reference["B06"]["x"], policy)


class TestSpeedReducer:
    def test_reference_objective_and_margins(self, reference):
        info = reference["B07"]
        objective, g = evaluate_raw("B07", info["x"])
        assert objective == pytest.approx(2994.4711, abs=0.2)
        assert g[0] == pytest.approx(-0.074, abs=1e-3)
        assert g[6] == pytest.approx(-0.703, abs=1e-3)

    def test_full_precision_optimum(self):
        x = [3.5, 0.7, 17.0, 7.3, 7.715319911478288, 3.350214666096365, 5.286654465052834]
        objective, g = evaluate_raw("B07", x)
        assert objective == pytest.approx(2994.4710661929257, abs=1e-6)
        assert np.all(np.asarray(g) <= 1e-9)


class TestPenalty:
    def test_feasible_point_unpenalized(self):
        problem = get_problem("B07")
        x = np.array([3.5, 0.7, 17.0, 7.3, 7.72, 3.36, 5.29])
        raw, _ = problem.evaluate_raw(x)
        assert problem.is_feasible(x)
        assert problem.penalized(x) == raw

    def test_unit_violation_adds_coefficient(self):
        # hand-built single-unit violation of the clutch width constraint
        problem = get_problem("B01")
        x = np.array([70.0, 89.0, 1.0, 820.0, 3.0])  # g1 = -1 exactly
        raw, g = problem.evaluate_raw(x)
        assert g[0] == -1.0
        violations = problem.violations(g, PenaltyPolicy())
        others = np.delete(violations, 0)
        assert violations[0] == 1.0 and np.all(others == 0)
        assert problem.penalized(x) == pytest.approx(raw + 1e9, rel=1e-12)

    def test_equality_at_tolerance_boundary_is_free(self):
        policy = PenaltyPolicy(eq_tol=1e-4)
        problem = get_problem("B06")
        from realopt.engineering import Constraint
        eq = Constraint("h", "eq")
        assert eq.violation(1e-4, policy.eq_tol) == 0.0
        assert eq.violation(1.1e-4, policy.eq_tol) > 0.0

    def test_monotone_in_violation(self):
        problem = get_problem("B07")
        base = np.array([3.5, 0.7, 17.0, 7.3, 7.72, 3.36, 5.29])
        tight = base.copy()
        tight[0] = 2.6   # pushes g1 positive
        worse = tight.copy()
        worse[2] = 17.0
        worse[1] = 0.7
        v1 = problem.penalized(tight)
        tighter = tight.copy()
        tighter[1] = 0.72
        v2 = problem.penalized(tighter)
        raw1, g1 = problem.evaluate_raw(tight)
        raw2, g2 = problem.evaluate_raw(tighter)
        total1 = problem.violations(g1, PenaltyPolicy()).sum()
        total2 = problem.violations(g2, PenaltyPolicy()).sum()
        assert (total1 > total2) == (v1 - raw1 > v2 - raw2)

    def test_nonfinite_constraint_contributes_large_violation(self):
        problem = get_problem("B02")
        x = np.array([20.0, 20.0, 150.0, 0.0, 50.0, 300.0, 2.0])
        assert problem.penalized(x) == math.inf


def test_catalog_and_budgets():
    assert engineering_ids() == ["B01", "B02", "B03", "B04", "B05", "B06", "B07"]
    assert set(NFE_BUDGETS) == set(engineering_ids())
    with pytest.raises(KeyError):
        get_problem("B99")
