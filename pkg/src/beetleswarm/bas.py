"""Single-agent beetle antennae search.

One simulated beetle probes the fitness at two antenna points placed
symmetrically around its position along a random direction, then steps a
distance delta toward the antenna that smelled better (lower fitness,
everything here minimizes). Both the step length and the antenna spacing
shrink over the run, geometrically by default.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import asdict, dataclass, fields, replace

import numpy as np

from .core import Problem, RandomStream, RunRecord, clamp_to_bounds, uniform_in_space

Array = np.ndarray

MIN_STEP = 1e-12

SCHEDULES = ("geometric", "affine")


@dataclass(frozen=True)
class BasConfig:
    """Tunables for a BAS run.

    ``delta0`` of None means 30% of the widest box side, a scale that
    grows with the problem like the antenna metaphor suggests. The
    geometric schedule multiplies the step by ``eta`` each iteration; the
    affine one applies ``c1 * delta + delta_floor`` instead and is mainly
    exposed for experimentation (it diverges when c1 >= 1 with a positive
    floor). Antenna spacing is always ``delta / c2_ratio``.
    """

    delta0: float | None = None
    eta: float = 0.95
    c2_ratio: float = 5.0
    schedule: str = "geometric"
    c1: float = 0.0
    delta_floor: float = 0.0
    max_iters: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.delta0 is not None and not self.delta0 > 0:
            raise ValueError("delta0 must be positive (or None for automatic scaling)")
        if not 0 < self.eta <= 1:
            raise ValueError("eta must lie in (0, 1]")
        if not self.c2_ratio > 0:
            raise ValueError("c2_ratio must be positive")
        if self.schedule not in SCHEDULES:
            raise ValueError(f"schedule must be one of {SCHEDULES}")
        if self.max_iters < 0:
            raise ValueError("max_iters must be nonnegative")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "BasConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown config keys: {unknown}")
        return cls(**data)


@dataclass(frozen=True)
class BasState:
    """Beetle position plus schedule values and the best seen so far."""

    x: Array
    delta: float
    d: float
    t: int
    best_x: Array
    best_f: float


def _normalize(v: Array) -> Array:
    """Scale a nonzero vector to unit Euclidean length."""
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / norm


def sample_direction(rng: RandomStream, dim: int) -> Array:
    """Random unit vector with components i.i.d. symmetric about zero.

    Draws ``dim`` uniforms, maps them to [-1, 1) and normalizes. The
    all-zero draw (probability zero, but representable) is redrawn.
    """
    if dim < 1:
        raise ValueError("dim must be at least 1")
    while True:
        raw = 2.0 * rng.uniform(dim) - 1.0
        if np.any(raw != 0.0):
            return _normalize(raw)


def antennae(x: Array, b: Array, d: float) -> tuple[Array, Array]:
    """Left/right probe points half the antenna spacing from the body."""
    if not d > 0:
        raise ValueError("antenna spacing d must be positive")
    offset = (d / 2.0) * b
    return x + offset, x - offset


def bas_step(state: BasState, problem: Problem, rng: RandomStream) -> BasState:
    """Advance the beetle one iteration.

    Probes both antennae, steps toward the lower-fitness side
    (x' = x - delta * b * sign(f(right) - f(left))), clamps the new
    position to the box and folds all three evaluations into the
    best-so-far. Probe points are deliberately evaluated unclamped unless
    the problem asks otherwise; they are sensors, not candidate positions.
    """
    b = sample_direction(rng, problem.space.dim)
    x_right, x_left = antennae(state.x, b, state.d)
    if problem.clamp_probes:
        x_right = clamp_to_bounds(x_right, problem.space)
        x_left = clamp_to_bounds(x_left, problem.space)
    f_right = problem.evaluate(x_right, rng)
    f_left = problem.evaluate(x_left, rng)

    x_new = state.x - state.delta * b * np.sign(f_right - f_left)
    x_new = clamp_to_bounds(x_new, problem.space)
    f_new = problem.evaluate(x_new, rng)

    best_x, best_f = state.best_x, state.best_f
    for cand_x, cand_f in ((x_right, f_right), (x_left, f_left), (x_new, f_new)):
        if cand_f < best_f:
            best_x, best_f = cand_x, cand_f
    return BasState(x=x_new, delta=state.delta, d=state.d, t=state.t + 1, best_x=best_x, best_f=best_f)


def update_schedules(delta: float, config: BasConfig) -> tuple[float, float]:
    """Next step length and antenna spacing.

    A schedule that drives the step nonpositive has stalled; the step is
    pinned at a tiny positive value and a RuntimeWarning flags it.
    """
    if config.schedule == "geometric":
        new_delta = config.eta * delta
    else:
        new_delta = config.c1 * delta + config.delta_floor
    if new_delta <= 0:
        warnings.warn("step schedule produced a nonpositive step; search has stalled", RuntimeWarning)
        new_delta = MIN_STEP
    return new_delta, new_delta / config.c2_ratio


def run_bas(problem: Problem, config: BasConfig, seed: int | None = None) -> RunRecord:
    """Run BAS from a uniform random start for ``max_iters`` iterations."""
    effective_seed = config.seed if seed is None else int(seed)
    rng = RandomStream(effective_seed)
    delta0 = config.delta0 if config.delta0 is not None else 0.3 * float(problem.space.widths.max())

    start = time.perf_counter()
    x0 = uniform_in_space(rng, problem.space)
    f0 = problem.evaluate(x0, rng)
    state = BasState(x=x0, delta=delta0, d=delta0 / config.c2_ratio, t=0, best_x=x0, best_f=f0)
    curve = [state.best_f]
    for _ in range(config.max_iters):
        state = bas_step(state, problem, rng)
        new_delta, new_d = update_schedules(state.delta, config)
        state = replace(state, delta=new_delta, d=new_d)
        curve.append(state.best_f)
    elapsed = time.perf_counter() - start

    snapshot = config.to_dict()
    snapshot["seed"] = effective_seed
    return RunRecord(
        problem_id=problem.id,
        algorithm="bas",
        seed=effective_seed,
        config=snapshot,
        curve=np.asarray(curve),
        best_x=state.best_x,
        best_f=state.best_f,
        wall_time_s=elapsed,
    )
