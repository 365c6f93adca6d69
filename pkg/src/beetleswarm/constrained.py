"""Constrained engineering design problems with exterior-penalty handling.

Two classic mixed/nonlinear design benchmarks are registered here:

* ``PV`` - pressure vessel design: minimize material, forming and welding
  cost of a cylindrical vessel with hemispherical heads. Four variables
  (shell thickness, head thickness, inner radius, cylinder length); the
  two thicknesses are only available in multiples of 0.0625 inch, so they
  snap to that grid before every evaluation. Four "<= 0" constraints.

* ``HB`` - Himmelblau's five-variable nonlinear optimization problem,
  with three constraint functions that must each stay inside an interval.

Constraint handling is a static exterior penalty: fitness seen by the
optimizers is raw objective plus ``weight * sum(violation ** exponent)``,
which equals the raw objective exactly on the feasible set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Problem, SearchSpace

Array = np.ndarray


@dataclass(frozen=True)
class PenaltyConfig:
    """Exterior penalty: weight * violation^exponent per constraint, summed.

    The weight default is deliberately stiff. Both design optima here sit
    exactly on constraint boundaries, and a quadratic penalty lets the
    swarm trade a visible objective gain for an O(sqrt(gain/weight))
    boundary violation; 1e12 pushes that equilibrium violation below 1e-9,
    comfortably inside the feasibility tolerance used for reporting.
    """

    weight: float = 1e12
    exponent: float = 2.0

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError("penalty weight must be nonnegative")
        if self.exponent < 1:
            raise ValueError("penalty exponent must be at least 1")


@dataclass(frozen=True)
class DiscreteGrid:
    """Values restricted to {k_min..k_max} * step."""

    step: float
    k_min: int
    k_max: int

    def snap(self, values: Array) -> Array:
        k = np.clip(np.round(np.asarray(values, dtype=float) / self.step), self.k_min, self.k_max)
        return k * self.step


@dataclass(frozen=True)
class ConstrainedProblem:
    """Raw objective, interval constraints and per-dimension variable kinds.

    ``g_lower``/``g_upper`` give the feasible interval per constraint;
    one-sided "g <= 0" constraints use lower = -inf, upper = 0.
    ``grids`` has one entry per dimension: a DiscreteGrid for snapped
    variables, None for continuous ones.
    """

    id: str
    space: SearchSpace
    raw_batch: Callable[[Array], Array]
    constraint_batch: Callable[[Array], Array]
    g_lower: Array
    g_upper: Array
    grids: tuple[DiscreteGrid | None, ...]

    def snap_many(self, X: Array) -> Array:
        X = np.array(X, dtype=float, copy=True)
        for j, grid in enumerate(self.grids):
            if grid is not None:
                X[:, j] = grid.snap(X[:, j])
        return X

    def snap(self, x) -> Array:
        return self.snap_many(np.asarray(x, dtype=float)[None, :])[0]

    def raw(self, x) -> float:
        return float(self.raw_batch(np.asarray(x, dtype=float)[None, :])[0])

    def constraints(self, x) -> Array:
        return self.constraint_batch(np.asarray(x, dtype=float)[None, :])[0]

    def violations_many(self, X: Array) -> Array:
        """(m, n_constraints) array of interval violations, zero when satisfied."""
        g = self.constraint_batch(np.asarray(X, dtype=float))
        return np.maximum(0.0, np.maximum(self.g_lower - g, g - self.g_upper))

    def feasible(self, x, tol: float = 1e-6) -> bool:
        """Whether every constraint holds, within ``tol`` absolute slack.

        Both problems' optima sit exactly on constraint boundaries, so a
        converged solution lands within floating-point noise of g = bound;
        the default slack accepts those boundary points (set tol=0 for the
        exact check).
        """
        g = self.constraints(x)
        return bool(np.all(g >= self.g_lower - tol) and np.all(g <= self.g_upper + tol))

    def report(self, x, tol: float = 1e-6) -> dict:
        """Snapped point, raw objective, constraint values and feasibility."""
        xs = self.snap(x)
        g = self.constraints(xs)
        return {
            "x": [float(v) for v in xs],
            "raw_objective": self.raw(xs),
            "g": [float(v) for v in g],
            "feasible": self.feasible(xs, tol),
        }


def snap_discrete(x, grids: tuple[DiscreteGrid | None, ...]) -> Array:
    """Round discrete components to their nearest admissible grid value."""
    x = np.asarray(x, dtype=float)
    out = x.copy()
    for j, grid in enumerate(grids):
        if grid is not None:
            out[j] = grid.snap(np.asarray([x[j]]))[0]
    return out


def penalized_fitness(problem: ConstrainedProblem, x, config: PenaltyConfig) -> float:
    """Raw objective plus the exterior penalty at a single point."""
    X = np.asarray(x, dtype=float)[None, :]
    raw = float(problem.raw_batch(X)[0])
    viol = problem.violations_many(X)[0]
    return raw + config.weight * float((viol**config.exponent).sum())


# ---------------------------------------------------------------------------
# pressure vessel design
# ---------------------------------------------------------------------------


def _pv_cost(X: Array) -> Array:
    x1, x2, x3, x4 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    return 0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3**2 + 3.1661 * x1**2 * x4 + 19.84 * x1**2 * x3


def _pv_constraints(X: Array) -> Array:
    x1, x2, x3, x4 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    g1 = -x1 + 0.0193 * x3
    g2 = -x2 + 0.00954 * x3
    g3 = -math.pi * x3**2 * x4 - (4.0 / 3.0) * math.pi * x3**3 + 1296000.0
    g4 = x4 - 240.0
    return np.stack([g1, g2, g3, g4], axis=1)


def pressure_vessel(x) -> tuple[float, Array]:
    """Cost and the four constraint values at a (snapped) 4-vector.

    Feasible iff every component of g is <= 0.
    """
    X = np.asarray(x, dtype=float)[None, :]
    return float(_pv_cost(X)[0]), _pv_constraints(X)[0]


_PV_GRID = DiscreteGrid(step=0.0625, k_min=1, k_max=99)

PRESSURE_VESSEL = ConstrainedProblem(
    id="PV",
    space=SearchSpace(
        np.array([1 * 0.0625, 1 * 0.0625, 10.0, 10.0]),
        np.array([99 * 0.0625, 99 * 0.0625, 200.0, 200.0]),
    ),
    raw_batch=_pv_cost,
    constraint_batch=_pv_constraints,
    g_lower=np.array([-np.inf] * 4),
    g_upper=np.zeros(4),
    grids=(_PV_GRID, _PV_GRID, None, None),
)


# ---------------------------------------------------------------------------
# Himmelblau's optimization problem
# ---------------------------------------------------------------------------


def _hb_objective(X: Array) -> Array:
    x1, x3, x5 = X[:, 0], X[:, 2], X[:, 4]
    return 5.3578547 * x3**2 + 0.8356891 * x1 * x5 + 37.29329 * x1 - 40792.141


def _hb_constraints(X: Array) -> Array:
    x1, x2, x3, x4, x5 = (X[:, i] for i in range(5))
    g1 = 85.334407 + 0.0056858 * x2 * x5 + 0.00026 * x1 * x4 - 0.0022053 * x3 * x5
    g2 = 80.51249 + 0.0071317 * x2 * x5 + 0.0029955 * x1 * x2 + 0.0021813 * x3**2
    g3 = 9.300961 + 0.0047026 * x3 * x5 + 0.0012547 * x1 * x3 + 0.0019085 * x3 * x4
    return np.stack([g1, g2, g3], axis=1)


def himmelblau(x) -> tuple[float, Array]:
    """Objective and the three constraint values at a 5-vector.

    Feasible iff 0 <= g1 <= 92, 90 <= g2 <= 110 and 20 <= g3 <= 25.
    """
    X = np.asarray(x, dtype=float)[None, :]
    return float(_hb_objective(X)[0]), _hb_constraints(X)[0]


HIMMELBLAU = ConstrainedProblem(
    id="HB",
    space=SearchSpace(
        np.array([78.0, 33.0, 27.0, 27.0, 27.0]),
        np.array([102.0, 45.0, 45.0, 45.0, 45.0]),
    ),
    raw_batch=_hb_objective,
    constraint_batch=_hb_constraints,
    g_lower=np.array([0.0, 90.0, 20.0]),
    g_upper=np.array([92.0, 110.0, 25.0]),
    grids=(None,) * 5,
)


_CONSTRAINED: dict[str, ConstrainedProblem] = {"PV": PRESSURE_VESSEL, "HB": HIMMELBLAU}
CONSTRAINED_IDS: tuple[str, ...] = tuple(_CONSTRAINED)


def constrained_problem(problem_id: str) -> ConstrainedProblem:
    key = str(problem_id).upper()
    if key not in _CONSTRAINED:
        raise KeyError(f"unknown constrained problem {problem_id!r}")
    return _CONSTRAINED[key]


def as_problem(cp: ConstrainedProblem, penalty: PenaltyConfig | None = None) -> Problem:
    """Penalized, snap-before-evaluate fitness wrapper for the optimizers.

    The optimizers stay purely continuous; discrete variables are snapped
    to their grid inside the wrapper, and infeasibility is priced in via
    the exterior penalty. Probe points are clamped to the box because the
    raw objectives are only physically meaningful there.
    """
    pen = penalty if penalty is not None else PenaltyConfig()

    def batch(X: Array, rng=None) -> Array:
        Xs = cp.snap_many(X)
        raw = cp.raw_batch(Xs)
        viol = cp.violations_many(Xs)
        return raw + pen.weight * (viol**pen.exponent).sum(axis=1)

    return Problem(id=cp.id, space=cp.space, batch=batch, clamp_probes=True)


def catalog() -> list[dict]:
    """Machine-readable listing of the constrained problems."""
    return [
        {
            "id": cp.id,
            "dim": cp.space.dim,
            "lower": [float(v) for v in cp.space.lower],
            "upper": [float(v) for v in cp.space.upper],
            "fmin": None,
            "stochastic": False,
        }
        for cp in _CONSTRAINED.values()
    ]
