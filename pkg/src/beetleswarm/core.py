"""Search spaces, objective contracts, seeded random streams and run records.

Everything in this module is shared by the optimizers: a box-constrained
search space, a minimization problem wrapper, a reproducible uniform
random stream, and the record type a single optimizer run produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

Array = np.ndarray


class RandomStream:
    """Seeded stream of uniform draws in [0, 1).

    Backed by numpy's PCG64 bit generator, which is pinned here on purpose:
    its output sequence is fully specified by the seed and is stable across
    platforms and numpy releases, so identical seeds reproduce identical
    runs everywhere. Batched draws consume the stream exactly like the same
    number of scalar draws.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def uniform(self, size: int | tuple[int, ...] | None = None):
        """Uniform draws in [0, 1); a float if size is None, else an array."""
        return self._gen.random(size)


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box of feasible positions."""

    lower: Array
    upper: Array

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("lower and upper must be 1-D arrays of equal length")
        if lower.size < 1:
            raise ValueError("search space needs at least one dimension")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def widths(self) -> Array:
        return self.upper - self.lower

    @classmethod
    def box(cls, dim: int, lower: float, upper: float) -> "SearchSpace":
        """Cube with the same bounds in every dimension."""
        return cls(np.full(dim, float(lower)), np.full(dim, float(upper)))


@dataclass(frozen=True)
class Problem:
    """A minimization problem over a box.

    ``batch`` maps an (m, dim) array of points to an (m,) array of fitness
    values. Evaluation must be deterministic unless ``stochastic`` is set,
    in which case each point evaluation consumes draws from the stream the
    caller passes in (this is how noisy objectives stay reproducible).

    ``clamp_probes`` asks optimizers to project antenna probe points into
    the box before evaluating them; it is set on problems whose objective
    is only meaningful inside the box (the constrained design problems).
    Benchmark objectives are total on all of R^dim and leave it off.
    """

    id: str
    space: SearchSpace
    batch: Callable[[Array, "RandomStream | None"], Array]
    known_fmin: float | None = None
    stochastic: bool = False
    clamp_probes: bool = False

    def evaluate(self, x, rng: RandomStream | None = None) -> float:
        """Fitness of a single point."""
        x = np.asarray(x, dtype=float)
        if x.ndim != 1 or x.size != self.space.dim:
            raise ValueError(
                f"{self.id}: expected a vector of length {self.space.dim}, got shape {x.shape}"
            )
        return float(self.evaluate_many(x[None, :], rng)[0])

    def evaluate_many(self, X, rng: RandomStream | None = None) -> Array:
        """Fitness of each row of an (m, dim) array."""
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.space.dim:
            raise ValueError(
                f"{self.id}: expected an (m, {self.space.dim}) array, got shape {X.shape}"
            )
        if self.stochastic and rng is None:
            raise ValueError(f"{self.id} is stochastic and needs a RandomStream to evaluate")
        return np.asarray(self.batch(X, rng), dtype=float)


@dataclass(frozen=True)
class RunRecord:
    """Everything one optimizer run produced.

    ``curve`` holds the best fitness seen so far at each iteration,
    including the initial population (length = iterations + 1), and is
    monotone nonincreasing. Two runs with the same seed, config and
    problem produce identical curves and best points; only
    ``wall_time_s`` varies between repeats.
    """

    problem_id: str
    algorithm: str
    seed: int
    config: dict
    curve: Array
    best_x: Array
    best_f: float
    wall_time_s: float

    def __post_init__(self):
        curve = np.asarray(self.curve, dtype=float)
        best_x = np.asarray(self.best_x, dtype=float)
        curve.setflags(write=False)
        best_x.setflags(write=False)
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "best_x", best_x)

    def to_dict(self) -> dict:
        """JSON-ready representation (arrays become lists)."""
        return {
            "problem": self.problem_id,
            "algorithm": self.algorithm,
            "seed": self.seed,
            "config": dict(self.config),
            "best_f": self.best_f,
            "best_x": [float(v) for v in self.best_x],
            "iterations": int(self.curve.size - 1),
            "wall_time_s": self.wall_time_s,
        }


def clamp_to_bounds(x, space: SearchSpace) -> Array:
    """Project a point (or an (m, dim) batch of points) onto the box.

    Components already inside keep their exact values; outside components
    land on the nearest bound. Idempotent.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != space.dim:
        raise ValueError(f"expected trailing dimension {space.dim}, got shape {x.shape}")
    return np.clip(x, space.lower, space.upper)


def uniform_in_space(rng: RandomStream, space: SearchSpace) -> Array:
    """One point drawn uniformly from the box; consumes exactly dim draws."""
    u = rng.uniform(space.dim)
    return space.lower + u * space.widths


def uniform_population(rng: RandomStream, space: SearchSpace, n: int) -> Array:
    """(n, dim) points drawn uniformly from the box, row by row."""
    u = rng.uniform((int(n), space.dim))
    return space.lower + u * space.widths
