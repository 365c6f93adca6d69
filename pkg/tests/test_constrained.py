"""Engineering-problem checks.

The reference rows below are best-known solutions reported across the
constrained-optimization literature for these two classic problems. Every
row is pushed through the raw objective and constraint transcriptions
here; the frozen values were computed once with an independent
straight-line script and must agree with the published numbers to the
stated tolerances. Two table cells are known to disagree with direct
evaluation of the stated formulas (detailed inline); for those the
directly computed value is pinned instead.
"""

import numpy as np
import pytest

from beetleswarm import (
    PenaltyConfig,
    constrained_problem,
    get_problem,
    himmelblau,
    list_problems,
    penalized_fitness,
    pressure_vessel,
    snap_discrete,
)
from beetleswarm.constrained import HIMMELBLAU, PRESSURE_VESSEL, as_problem

from beetleswarm import RandomStream


class TestPressureVesselTranscription:
    def test_reference_row(self):
        # widely cited near-optimal design; published cost 6059.7258
        cost, g = pressure_vessel([0.8125, 0.4375, 42.0984, 176.6378])
        assert cost == pytest.approx(6059.734830888689, rel=1e-12)
        assert cost == pytest.approx(6059.7258, rel=1e-3)
        assert g[0] == pytest.approx(-8.8e-7, abs=0.01)
        assert g[1] == pytest.approx(-0.0359, abs=0.01)
        assert g[2] == pytest.approx(-3.5586, abs=0.01)
        assert g[3] == pytest.approx(-63.3622, abs=0.01)

    def test_best_reported_row(self):
        # published row: cost 6059.7000, g = (0.0000, -0.0359, 0.0000, -63.3634)
        cost, g = pressure_vessel([0.8125, 0.4375, 42.0984, 176.6366])
        assert cost == pytest.approx(6059.706775750789, rel=1e-12)
        assert cost == pytest.approx(6059.7000, rel=1e-3)
        assert g[0] == pytest.approx(0.0, abs=0.01)
        assert g[1] == pytest.approx(-0.0359, abs=0.01)
        assert g[3] == pytest.approx(-63.3634, abs=0.01)
        # the published row prints g3 = 0.0000, but direct evaluation of the
        # stated volume constraint at this x gives +3.1227 (the x4 that
        # reproduces g3 ~ 0 is the 176.6378 of the reference row above);
        # the directly computed value is pinned, the table cell is not
        assert g[2] == pytest.approx(3.1226749981287867, rel=1e-12)

    def test_boundary_length_constraint(self):
        _, g = pressure_vessel([1.0, 1.0, 50.0, 240.0])
        assert g[3] == 0.0


class TestHimmelblauTranscription:
    def test_best_reported_row(self):
        # published row: f = -31025.5563, g = (92.00, 100.4048, 20.0000)
        f, g = himmelblau([78.0, 33.0, 27.0710, 45.0, 44.9692])
        assert f == pytest.approx(-31025.5581983285, rel=1e-12)
        assert f == pytest.approx(-31025.5563, rel=1e-3)
        assert g[0] == pytest.approx(92.00, abs=0.01)
        assert g[1] == pytest.approx(100.4048, abs=0.01)
        assert g[2] == pytest.approx(20.0000, abs=0.01)

    def test_reference_row(self):
        # classic benchmark solution; published f = -30665.539
        f, g = himmelblau([78.0, 33.0, 29.995256, 45.0, 36.775813])
        assert f == pytest.approx(-30665.53469589683, rel=1e-12)
        assert f == pytest.approx(-30665.539, rel=1e-3)
        assert g[1] == pytest.approx(98.8405, abs=0.01)
        assert g[2] == pytest.approx(20.0000, abs=0.01)
        # sources that print g1 = 92.00 for this row use 0.0006262 as the
        # x1*x4 coefficient; the statement implemented here has 0.00026,
        # under which this row's g1 evaluates to 90.7146 (and under which
        # the best reported row above does reproduce its printed 92.00)
        assert g[0] == pytest.approx(90.71463801352793, rel=1e-12)

    def test_constraint_smoothness(self):
        rng = RandomStream(3)
        space = HIMMELBLAU.space
        for _ in range(20):
            x = space.lower + rng.uniform(5) * space.widths
            _, g0 = himmelblau(x)
            for i in range(5):
                bumped = x.copy()
                bumped[i] += 1e-9
                _, g1 = himmelblau(bumped)
                assert np.all(np.abs(g1 - g0) <= 1e-6)


class TestSnapDiscrete:
    def test_rounds_to_nearest_multiple(self):
        out = snap_discrete([0.80, 0.30, 42.0, 176.0], PRESSURE_VESSEL.grids)
        assert out[0] == pytest.approx(0.8125)
        assert out[2] == 42.0 and out[3] == 176.0

    def test_fixed_point(self):
        out = snap_discrete([0.8125, 0.4375, 42.0, 176.0], PRESSURE_VESSEL.grids)
        assert out[0] == 0.8125 and out[1] == 0.4375

    def test_clamps_to_smallest_multiple(self):
        out = snap_discrete([0.01, 0.0, 42.0, 176.0], PRESSURE_VESSEL.grids)
        assert out[0] == 0.0625 and out[1] == 0.0625

    def test_clamps_to_largest_multiple(self):
        out = snap_discrete([7.5, 99.0, 42.0, 176.0], PRESSURE_VESSEL.grids)
        assert out[0] == pytest.approx(99 * 0.0625)

    def test_idempotent_and_bounded_movement(self):
        rng = RandomStream(9)
        for _ in range(200):
            x = np.array([7 * rng.uniform(), 7 * rng.uniform(), 100.0, 100.0])
            snapped = snap_discrete(x, PRESSURE_VESSEL.grids)
            again = snap_discrete(snapped, PRESSURE_VESSEL.grids)
            assert np.array_equal(snapped, again)
            for j in (0, 1):
                inside_grid = 0.0625 <= x[j] <= 99 * 0.0625
                if inside_grid:
                    assert abs(snapped[j] - x[j]) <= 0.0625 / 2 + 1e-12

    def test_continuous_components_untouched(self):
        x = [0.8, 0.4, 123.456789, 10.0001]
        out = snap_discrete(x, PRESSURE_VESSEL.grids)
        assert out[2] == 123.456789 and out[3] == 10.0001


class TestPenalty:
    def test_feasible_point_pays_nothing(self):
        cfg = PenaltyConfig()
        x = np.array([1.0, 1.0, 50.0, 100.0])  # comfortably feasible
        assert PRESSURE_VESSEL.feasible(x, tol=0.0)
        assert penalized_fitness(PRESSURE_VESSEL, x, cfg) == PRESSURE_VESSEL.raw(x)

    def test_length_violation_priced_by_exponent(self):
        cfg = PenaltyConfig(weight=100.0, exponent=2.0)
        x = np.array([6.0, 6.0, 50.0, 250.0])  # x4 - 240 = 10
        viol = PRESSURE_VESSEL.violations_many(x[None, :])[0]
        assert viol[3] == 10.0
        expected = PRESSURE_VESSEL.raw(x) + 100.0 * float((viol**2).sum())
        assert penalized_fitness(PRESSURE_VESSEL, x, cfg) == pytest.approx(expected, rel=1e-15)
        assert penalized_fitness(PRESSURE_VESSEL, x, cfg) - PRESSURE_VESSEL.raw(x) >= 100.0 * 10.0**2

    def test_zero_weight_degenerates_to_raw(self):
        cfg = PenaltyConfig(weight=0.0)
        rng = RandomStream(2)
        space = PRESSURE_VESSEL.space
        for _ in range(50):
            x = space.lower + rng.uniform(4) * space.widths
            assert penalized_fitness(PRESSURE_VESSEL, x, cfg) == PRESSURE_VESSEL.raw(x)

    def test_interval_violation_arithmetic(self):
        # Himmelblau constraints are two-sided: both shortfall and excess count
        g_low, g_high = HIMMELBLAU.g_lower, HIMMELBLAU.g_upper
        probe = np.array([[85.0, 120.0, 22.0]])  # g2 exceeds 110 by 10
        viol = np.maximum(0.0, np.maximum(g_low - probe, probe - g_high))
        assert np.array_equal(viol, [[0.0, 10.0, 0.0]])

    def test_penalized_equals_raw_on_random_feasible_set(self):
        for cp in (PRESSURE_VESSEL, HIMMELBLAU):
            rng = RandomStream(13)
            X = cp.space.lower + rng.uniform((10_000, cp.space.dim)) * cp.space.widths
            viol = cp.violations_many(X)
            feasible = np.all(viol == 0.0, axis=1)
            assert feasible.sum() > 100
            raw = cp.raw_batch(X)
            pen = np.array([penalized_fitness(cp, x, PenaltyConfig()) for x in X[feasible][:200]])
            assert np.array_equal(pen, raw[feasible][:200])
            infeasible_pen = np.array(
                [penalized_fitness(cp, x, PenaltyConfig()) for x in X[~feasible][:200]]
            )
            assert np.all(infeasible_pen > raw[~feasible][:200])

    def test_feasibility_tolerance_absorbs_boundary_noise(self):
        # a point one float-noise step outside the boundary
        x = np.array([0.8125, 0.4375, 42.0984456, 176.6366])
        g = PRESSURE_VESSEL.constraints(x)
        assert g[0] > 0 and g[0] < 1e-6
        assert PRESSURE_VESSEL.feasible(x)
        assert not PRESSURE_VESSEL.feasible(x, tol=0.0)

    def test_penalty_config_validation(self):
        with pytest.raises(ValueError):
            PenaltyConfig(weight=-1.0)
        with pytest.raises(ValueError):
            PenaltyConfig(exponent=0.5)


class TestProblemWrapper:
    def test_snaps_before_evaluating(self):
        p = as_problem(PRESSURE_VESSEL)
        raw_x = np.array([0.80, 0.43, 50.0, 100.0])
        snapped = PRESSURE_VESSEL.snap(raw_x)
        assert p.evaluate(raw_x) == penalized_fitness(PRESSURE_VESSEL, snapped, PenaltyConfig())

    def test_probe_clamping_requested(self):
        assert as_problem(PRESSURE_VESSEL).clamp_probes is True
        assert as_problem(HIMMELBLAU).clamp_probes is True

    def test_registered_in_catalog(self):
        ids = {e["id"] for e in list_problems()}
        assert {"PV", "HB"} <= ids
        assert len(ids) == 25
        assert get_problem("pv").id == "PV"
        assert get_problem("HB").space.dim == 5

    def test_unknown_constrained_id(self):
        with pytest.raises(KeyError):
            constrained_problem("XX")

    def test_report_shape(self):
        rep = PRESSURE_VESSEL.report([0.80, 0.43, 50.0, 100.0])
        assert set(rep) == {"x", "raw_objective", "g", "feasible"}
        assert len(rep["x"]) == 4 and len(rep["g"]) == 4
        assert rep["x"][0] == pytest.approx(0.8125)

    def test_himmelblau_bounds(self):
        space = HIMMELBLAU.space
        assert np.array_equal(space.lower, [78.0, 33.0, 27.0, 27.0, 27.0])
        assert np.array_equal(space.upper, [102.0, 45.0, 45.0, 45.0, 45.0])
