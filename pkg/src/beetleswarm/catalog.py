"""Unified problem lookup: benchmark ids F1..F23 plus PV and HB."""

from __future__ import annotations

from . import benchmarks, constrained
from .core import Problem


def get_problem(problem_id: str) -> Problem:
    """Problem instance for any catalogued id (case-insensitive)."""
    key = str(problem_id).upper()
    if key in constrained.CONSTRAINED_IDS:
        return constrained.as_problem(constrained.constrained_problem(key))
    return benchmarks.problem(key)


def list_problems() -> list[dict]:
    """Every catalog entry: id, dim, range, known minimum."""
    return benchmarks.catalog() + constrained.catalog()


def problem_ids() -> tuple[str, ...]:
    return benchmarks.BENCHMARK_IDS + constrained.CONSTRAINED_IDS
