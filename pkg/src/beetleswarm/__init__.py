"""Beetle swarm optimization toolkit.

Black-box continuous minimization with three related optimizers - beetle
swarm optimization (BSO), single-agent beetle antennae search (BAS) and a
global-best PSO baseline - plus a 23-function benchmark catalog, two
penalty-handled constrained engineering problems, and a seeded experiment
harness with CSV/JSON exports.
"""

from .bas import BasConfig, BasState, run_bas
from .benchmarks import BENCHMARK_IDS, BenchmarkSpec, evaluate, problem, spec
from .bso import BsoConfig, BsoEngine, SwarmState, inertia_weight, run_bso
from .catalog import get_problem, list_problems, problem_ids
from .constrained import (
    CONSTRAINED_IDS,
    ConstrainedProblem,
    PenaltyConfig,
    as_problem,
    constrained_problem,
    himmelblau,
    penalized_fitness,
    pressure_vessel,
    snap_discrete,
)
from .core import (
    Problem,
    RandomStream,
    RunRecord,
    SearchSpace,
    clamp_to_bounds,
    uniform_in_space,
)
from .harness import TrialSummary, compare_report, export_convergence, run_trials
from .pso import PsoConfig, run_pso

__version__ = "0.1.0"

__all__ = [
    "BENCHMARK_IDS",
    "BasConfig",
    "BasState",
    "BenchmarkSpec",
    "BsoConfig",
    "BsoEngine",
    "CONSTRAINED_IDS",
    "ConstrainedProblem",
    "PenaltyConfig",
    "Problem",
    "PsoConfig",
    "RandomStream",
    "RunRecord",
    "SearchSpace",
    "SwarmState",
    "TrialSummary",
    "as_problem",
    "clamp_to_bounds",
    "compare_report",
    "constrained_problem",
    "evaluate",
    "export_convergence",
    "get_problem",
    "himmelblau",
    "inertia_weight",
    "list_problems",
    "penalized_fitness",
    "pressure_vessel",
    "problem",
    "problem_ids",
    "run_bas",
    "run_bso",
    "run_pso",
    "run_trials",
    "snap_discrete",
    "spec",
    "uniform_in_space",
]
