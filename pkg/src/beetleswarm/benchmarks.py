"""The 23-function benchmark catalog.

Three families of classic test functions: high-dimensional unimodal (F1-F7),
high-dimensional multimodal (F8-F13) and fixed-dimension multimodal
(F14-F23), each registered with its standard dimension, box range and known
minimum. All evaluators are vectorized over an (m, dim) batch of points and
are total on R^dim, so antenna probes may be evaluated outside the box.

F7 is the one stochastic member: each evaluation adds a fresh uniform[0,1)
draw from the caller's stream on top of the weighted quartic sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Problem, RandomStream, SearchSpace

Array = np.ndarray


@dataclass(frozen=True)
class BenchmarkSpec:
    """Catalog entry: dimension, box range and tabulated minimum."""

    id: str
    dim: int
    lower: float
    upper: float
    fmin: float

    def space(self) -> SearchSpace:
        return SearchSpace.box(self.dim, self.lower, self.upper)


# ---------------------------------------------------------------------------
# constant tables for the fixed-dimension functions
# ---------------------------------------------------------------------------

FOXHOLES_A = np.array(
    [
        [-32, -16, 0, 16, 32] * 5,
        [-32] * 5 + [-16] * 5 + [0] * 5 + [16] * 5 + [32] * 5,
    ],
    dtype=float,
)

KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16], dtype=float)

HARTMANN3_A = np.array([[3, 10, 30], [0.1, 10, 35], [3, 10, 30], [0.1, 10, 35]], dtype=float)
HARTMANN3_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_P = np.array(
    [
        [0.3689, 0.1170, 0.2673],
        [0.4699, 0.4387, 0.7470],
        [0.1091, 0.8732, 0.5547],
        [0.0381, 0.5743, 0.8828],
    ]
)

HARTMANN6_A = np.array(
    [
        [10, 3, 17, 3.5, 1.7, 8],
        [0.05, 10, 17, 0.1, 8, 14],
        [3, 3.5, 1.7, 10, 17, 8],
        [17, 8, 0.05, 10, 0.1, 14],
    ],
    dtype=float,
)
HARTMANN6_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)

SHEKEL_A = np.array(
    [
        [4, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ],
    dtype=float,
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])

for _tbl in (
    FOXHOLES_A,
    KOWALIK_A,
    KOWALIK_B,
    HARTMANN3_A,
    HARTMANN3_C,
    HARTMANN3_P,
    HARTMANN6_A,
    HARTMANN6_C,
    HARTMANN6_P,
    SHEKEL_A,
    SHEKEL_C,
):
    _tbl.setflags(write=False)


# ---------------------------------------------------------------------------
# evaluators, each (m, dim) -> (m,)
# ---------------------------------------------------------------------------


def _sphere(X: Array, rng=None) -> Array:
    return (X * X).sum(axis=1)


def _abs_sum_and_product(X: Array, rng=None) -> Array:
    A = np.abs(X)
    return A.sum(axis=1) + A.prod(axis=1)


def _rotated_ellipsoid(X: Array, rng=None) -> Array:
    # sum of squared prefix sums
    return (np.cumsum(X, axis=1) ** 2).sum(axis=1)


def _max_abs(X: Array, rng=None) -> Array:
    return np.abs(X).max(axis=1)


def _rosenbrock(X: Array, rng=None) -> Array:
    return (100.0 * (X[:, 1:] - X[:, :-1] ** 2) ** 2 + (X[:, :-1] - 1.0) ** 2).sum(axis=1)


def _step(X: Array, rng=None) -> Array:
    return (np.floor(X + 0.5) ** 2).sum(axis=1)


def quartic_without_noise(X: Array) -> Array:
    """Deterministic part of F7: sum_i i * x_i^4 over each row."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    idx = np.arange(1, X.shape[1] + 1, dtype=float)
    return (idx * X**4).sum(axis=1)


def _quartic_noisy(X: Array, rng: RandomStream) -> Array:
    # one fresh uniform[0,1) draw per evaluated point, added after the sum
    return quartic_without_noise(X) + rng.uniform(X.shape[0])


def _schwefel(X: Array, rng=None) -> Array:
    return (-X * np.sin(np.sqrt(np.abs(X)))).sum(axis=1)


def _rastrigin(X: Array, rng=None) -> Array:
    return (X * X - 10.0 * np.cos(2.0 * np.pi * X) + 10.0).sum(axis=1)


def _ackley(X: Array, rng=None) -> Array:
    n = X.shape[1]
    root_mean_sq = np.sqrt((X * X).sum(axis=1) / n)
    mean_cos = np.cos(2.0 * np.pi * X).sum(axis=1) / n
    return -20.0 * np.exp(-0.2 * root_mean_sq) - np.exp(mean_cos) + 20.0 + math.e


def _griewank(X: Array, rng=None) -> Array:
    idx = np.sqrt(np.arange(1, X.shape[1] + 1, dtype=float))
    return (X * X).sum(axis=1) / 4000.0 - np.cos(X / idx).prod(axis=1) + 1.0


def _boundary_penalty(X: Array, a: float, k: float, m: float) -> Array:
    # k * (|x| - a)^m outside [-a, a], zero inside
    over = np.maximum(0.0, np.abs(X) - a)
    return k * (over**m).sum(axis=1)


def _penalized_quartic_sine(X: Array, rng=None) -> Array:
    n = X.shape[1]
    y = 1.0 + (X + 1.0) / 4.0
    head = 10.0 * np.sin(np.pi * y[:, 0]) ** 2
    body = ((y[:, :-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[:, 1:]) ** 2)).sum(axis=1)
    tail = (y[:, -1] - 1.0) ** 2
    return np.pi / n * (head + body + tail) + _boundary_penalty(X, 10.0, 100.0, 4.0)


def _penalized_level_sine(X: Array, rng=None) -> Array:
    head = np.sin(3.0 * np.pi * X[:, 0]) ** 2
    body = ((X[:, :-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * X[:, 1:]) ** 2)).sum(axis=1)
    tail = (X[:, -1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * X[:, -1]) ** 2)
    return 0.1 * (head + body + tail) + _boundary_penalty(X, 5.0, 100.0, 4.0)


def _foxholes(X: Array, rng=None) -> Array:
    # diff: (m, 2, 25)
    diff = X[:, :, None] - FOXHOLES_A[None, :, :]
    denom = np.arange(1, 26, dtype=float) + (diff**6).sum(axis=1)
    return 1.0 / (1.0 / 500.0 + (1.0 / denom).sum(axis=1))


def _kowalik(X: Array, rng=None) -> Array:
    b = KOWALIK_B
    numer = b * b + b * X[:, 1:2]
    denom = b * b + b * X[:, 2:3] + X[:, 3:4]
    return ((KOWALIK_A - X[:, 0:1] * numer / denom) ** 2).sum(axis=1)


def _six_hump_camel(X: Array, rng=None) -> Array:
    x1, x2 = X[:, 0], X[:, 1]
    return 4 * x1**2 - 2.1 * x1**4 + x1**6 / 3.0 + x1 * x2 - 4 * x2**2 + 4 * x2**4


def _branin(X: Array, rng=None) -> Array:
    x1, x2 = X[:, 0], X[:, 1]
    a = x2 - 5.1 / (4 * np.pi**2) * x1**2 + 5.0 / np.pi * x1 - 6.0
    return a**2 + 10.0 * (1.0 - 1.0 / (8.0 * np.pi)) * np.cos(x1) + 10.0


def _goldstein_price(X: Array, rng=None) -> Array:
    x1, x2 = X[:, 0], X[:, 1]
    t1 = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    t2 = 30 + (2 * x1 - 3 * x2) ** 2 * (
        18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2
    )
    return t1 * t2


def _hartmann(A: Array, C: Array, P: Array) -> Callable[[Array, object], Array]:
    def f(X: Array, rng=None) -> Array:
        inner = (A[None, :, :] * (X[:, None, :] - P[None, :, :]) ** 2).sum(axis=2)
        return -(np.exp(-inner) @ C)

    return f


def _shekel(m: int) -> Callable[[Array, object], Array]:
    a, c = SHEKEL_A[:m], SHEKEL_C[:m]

    def f(X: Array, rng=None) -> Array:
        d = ((X[:, None, :] - a[None, :, :]) ** 2).sum(axis=2)
        return -(1.0 / (d + c)).sum(axis=1)

    return f


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_BatchFn = Callable[[Array, "RandomStream | None"], Array]

_DEFS: list[tuple[str, int, float, float, float, _BatchFn, bool]] = [
    ("F1", 30, -100, 100, 0.0, _sphere, False),
    ("F2", 30, -10, 10, 0.0, _abs_sum_and_product, False),
    ("F3", 30, -100, 100, 0.0, _rotated_ellipsoid, False),
    ("F4", 30, -100, 100, 0.0, _max_abs, False),
    ("F5", 30, -30, 30, 0.0, _rosenbrock, False),
    ("F6", 30, -100, 100, 0.0, _step, False),
    ("F7", 30, -1.28, 1.28, 0.0, _quartic_noisy, True),
    ("F8", 30, -500, 500, -418.9829 * 30, _schwefel, False),
    ("F9", 30, -5.12, 5.12, 0.0, _rastrigin, False),
    ("F10", 30, -32, 32, 0.0, _ackley, False),
    ("F11", 30, -600, 600, 0.0, _griewank, False),
    ("F12", 30, -50, 50, 0.0, _penalized_quartic_sine, False),
    ("F13", 30, -50, 50, 0.0, _penalized_level_sine, False),
    ("F14", 2, -65, 65, 0.9980, _foxholes, False),
    ("F15", 4, -5, 5, 0.00030, _kowalik, False),
    ("F16", 2, -5, 5, -1.0316, _six_hump_camel, False),
    ("F17", 2, -5, 5, 0.398, _branin, False),
    ("F18", 2, -2, 2, 3.0, _goldstein_price, False),
    ("F19", 3, 1, 3, -3.86, _hartmann(HARTMANN3_A, HARTMANN3_C, HARTMANN3_P), False),
    ("F20", 6, 0, 1, -3.32, _hartmann(HARTMANN6_A, HARTMANN6_C, HARTMANN6_P), False),
    ("F21", 4, 0, 10, -10.1532, _shekel(5), False),
    ("F22", 4, 0, 10, -10.4028, _shekel(7), False),
    ("F23", 4, 0, 10, -10.5363, _shekel(10), False),
]

_SPECS: dict[str, BenchmarkSpec] = {}
_BATCH: dict[str, _BatchFn] = {}
_STOCHASTIC: dict[str, bool] = {}
for _id, _dim, _lo, _hi, _fmin, _fn, _noisy in _DEFS:
    _SPECS[_id] = BenchmarkSpec(_id, _dim, float(_lo), float(_hi), float(_fmin))
    _BATCH[_id] = _fn
    _STOCHASTIC[_id] = _noisy

BENCHMARK_IDS: tuple[str, ...] = tuple(_SPECS)


def spec(benchmark_id: str) -> BenchmarkSpec:
    """Catalog entry for one function id (F1..F23)."""
    key = str(benchmark_id).upper()
    if key not in _SPECS:
        raise KeyError(f"unknown benchmark {benchmark_id!r}")
    return _SPECS[key]


def problem(benchmark_id: str) -> Problem:
    """Wrap a catalog function as a minimization Problem."""
    s = spec(benchmark_id)
    return Problem(
        id=s.id,
        space=s.space(),
        batch=_BATCH[s.id],
        known_fmin=s.fmin,
        stochastic=_STOCHASTIC[s.id],
    )


def evaluate(benchmark_id: str, x, rng: RandomStream | None = None) -> float:
    """Evaluate one catalog function at a single point.

    ``rng`` is required for F7 (its noise draw comes from the caller's
    stream) and ignored everywhere else.
    """
    return problem(benchmark_id).evaluate(x, rng)


def catalog() -> list[dict]:
    """Machine-readable listing of the whole catalog."""
    return [
        {
            "id": s.id,
            "dim": s.dim,
            "lower": s.lower,
            "upper": s.upper,
            "fmin": s.fmin,
            "stochastic": _STOCHASTIC[s.id],
        }
        for s in _SPECS.values()
    ]
