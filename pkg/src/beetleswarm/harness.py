"""Statistical experiment runner and report/export formats.

A "trial" is one full optimizer run; ``run_trials`` repeats a run
``n_trials`` times with seeds ``base_seed + i`` and reduces the final best
fitnesses to mean / sample standard deviation / best, plus the mean
wall-clock time. Trials are independent, so with ``BSO_THREADS`` set above
1 they execute in a process pool; because every trial owns its seed, the
parallel and serial paths produce identical statistics (timings aside).

Exports: per-run convergence curves as two-column CSV at full double
precision, and cross-algorithm comparison reports as JSON plus an aligned
plain-text table carrying the same numbers.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import catalog
from .bas import BasConfig, run_bas
from .bso import BsoConfig, run_bso
from .core import Problem, RunRecord
from .pso import PsoConfig, run_pso

ALGORITHMS = ("bso", "bas", "pso")
CONFIG_TYPES = {"bso": BsoConfig, "bas": BasConfig, "pso": PsoConfig}

REPORT_SCHEMA = "beetleswarm-compare-v1"


@dataclass(frozen=True)
class TrialSummary:
    """Statistics of one (algorithm, problem) cell over repeated trials.

    ``std`` is the sample standard deviation (divisor n-1); a single trial
    reports 0 by convention. ``source`` is "computed" for cells produced
    by this harness; externally supplied literature rows use
    "literature" and may omit seeds.
    """

    problem_id: str
    algorithm: str
    n_trials: int
    ave: float
    std: float
    ave_time_s: float
    best: float
    seeds: tuple[int, ...] = ()
    source: str = "computed"

    def __post_init__(self):
        if self.std < 0:
            raise ValueError("std must be nonnegative")
        if self.best > self.ave and not math.isclose(self.best, self.ave, rel_tol=1e-12, abs_tol=1e-12):
            raise ValueError("best trial cannot exceed the mean")
        if self.source == "computed" and self.n_trials != len(self.seeds):
            raise ValueError("n_trials must equal the number of seeds")

    def to_dict(self) -> dict:
        return {
            "problem": self.problem_id,
            "algorithm": self.algorithm,
            "n_trials": self.n_trials,
            "ave": self.ave,
            "std": self.std,
            "ave_time_s": self.ave_time_s,
            "best": self.best,
            "seeds": list(self.seeds),
            "source": self.source,
        }


def run_one(algorithm: str, problem: Problem, config, seed: int) -> RunRecord:
    """Dispatch a single seeded run to the named optimizer."""
    if algorithm == "bso":
        return run_bso(problem, config, seed=seed)
    if algorithm == "pso":
        return run_pso(problem, config, seed=seed)
    if algorithm == "bas":
        return run_bas(problem, config, seed=seed)
    raise KeyError(f"unknown algorithm {algorithm!r}")


def _run_by_id(algorithm: str, problem_id: str, config_data: dict, seed: int) -> RunRecord:
    # Worker-side entry point: rebuilds problem and config from plain data
    # so arguments stay picklable for the process pool.
    config = CONFIG_TYPES[algorithm].from_dict(config_data)
    return run_one(algorithm, catalog.get_problem(problem_id), config, seed)


def _worker_count() -> int:
    raw = os.environ.get("BSO_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_trial_records(
    algorithm: str, problem: Problem, config, n_trials: int, base_seed: int
) -> list[RunRecord]:
    """All trial records for one cell, seeds base_seed..base_seed+n-1."""
    if algorithm not in ALGORITHMS:
        raise KeyError(f"unknown algorithm {algorithm!r}")
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    seeds = [int(base_seed) + i for i in range(int(n_trials))]

    workers = _worker_count()
    known_ids = set(catalog.problem_ids())
    if workers > 1 and n_trials > 1 and problem.id in known_ids:
        config_data = config.to_dict()
        with ProcessPoolExecutor(max_workers=min(workers, n_trials)) as pool:
            futures = [
                pool.submit(_run_by_id, algorithm, problem.id, config_data, s) for s in seeds
            ]
            return [f.result() for f in futures]
    return [run_one(algorithm, problem, config, s) for s in seeds]


def summarize(records: list[RunRecord]) -> TrialSummary:
    """Reduce trial records for one cell to a TrialSummary."""
    if not records:
        raise ValueError("no records to summarize")
    finals = np.array([r.best_f for r in records], dtype=float)
    times = np.array([r.wall_time_s for r in records], dtype=float)
    std = float(np.std(finals, ddof=1)) if finals.size > 1 else 0.0
    return TrialSummary(
        problem_id=records[0].problem_id,
        algorithm=records[0].algorithm,
        n_trials=len(records),
        ave=float(np.mean(finals)),
        std=std,
        ave_time_s=float(np.mean(times)),
        best=float(np.min(finals)),
        seeds=tuple(r.seed for r in records),
    )


def run_trials(
    algorithm: str, problem: Problem, config, n_trials: int, base_seed: int
) -> TrialSummary:
    """Run one (algorithm, problem) cell and summarize it."""
    return summarize(run_trial_records(algorithm, problem, config, n_trials, base_seed))


def run_matrix(
    algorithms: list[str],
    problem_ids: list[str],
    configs: dict[str, object],
    n_trials: int,
    base_seed: int,
) -> list[TrialSummary]:
    """Full algorithms x problems matrix, one summary per cell.

    All (algorithm, problem, trial) triples are independent, so with
    BSO_THREADS > 1 they share one process pool; aggregation happens here,
    in submission order, which keeps the summaries identical to a serial
    run.
    """
    for algo in algorithms:
        if algo not in ALGORITHMS:
            raise KeyError(f"unknown algorithm {algo!r}")
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    seeds = [int(base_seed) + i for i in range(int(n_trials))]
    triples = [(algo, pid, s) for algo in algorithms for pid in problem_ids for s in seeds]

    workers = _worker_count()
    if workers > 1 and len(triples) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(triples))) as pool:
            futures = [
                pool.submit(_run_by_id, algo, pid, configs[algo].to_dict(), s)
                for algo, pid, s in triples
            ]
            records = [f.result() for f in futures]
    else:
        records = [
            _run_by_id(algo, pid, configs[algo].to_dict(), s) for algo, pid, s in triples
        ]

    summaries = []
    per_cell = len(seeds)
    for i in range(0, len(records), per_cell):
        summaries.append(summarize(records[i : i + per_cell]))
    return summaries


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------


def export_convergence(record: RunRecord, destination) -> Path:
    """Write the best-so-far curve as CSV, one row per iteration.

    Values are printed with 17 significant digits so a round-trip parse
    reproduces the in-memory curve bit-exactly.
    """
    if record.curve.size == 0:
        raise ValueError("record has an empty curve")
    path = Path(destination)
    lines = ["iteration,best_fitness"]
    lines.extend(f"{i},{v:.17g}" for i, v in enumerate(record.curve))
    path.write_text("\n".join(lines) + "\n")
    return path


def _format_table(problems: list[str], algorithms: list[str], cells: dict) -> str:
    headers = ["problem"]
    for algo in algorithms:
        headers += [f"{algo}_ave", f"{algo}_std", f"{algo}_time_s"]
    rows = [headers]
    for pid in problems:
        row = [pid]
        for algo in algorithms:
            cell = cells[pid][algo]
            # repr() of a float is its shortest exact form, the same one the
            # JSON report carries, so both documents parse to identical numbers
            row += [repr(cell["ave"]), repr(cell["std"]), repr(cell["ave_time_s"])]
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
    out = []
    for r in rows:
        out.append("  ".join(val.ljust(w) for val, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


def compare_report(summaries: list[TrialSummary], destination) -> tuple[Path, Path]:
    """Write report.json and report.txt for a problems x algorithms matrix.

    Every algorithm must cover the same problem set; anything missing or
    extra is an error that names the offending cells.
    """
    if not summaries:
        raise ValueError("no summaries to report")
    algorithms: list[str] = []
    problems: list[str] = []
    cells: dict[str, dict[str, dict]] = {}
    for s in summaries:
        if s.algorithm not in algorithms:
            algorithms.append(s.algorithm)
        if s.problem_id not in problems:
            problems.append(s.problem_id)
        cells.setdefault(s.problem_id, {})
        if s.algorithm in cells[s.problem_id]:
            raise ValueError(f"duplicate cell ({s.problem_id}, {s.algorithm})")
        cells[s.problem_id][s.algorithm] = s.to_dict()

    missing = [
        f"({pid}, {algo})"
        for pid in problems
        for algo in algorithms
        if algo not in cells[pid]
    ]
    if missing:
        raise ValueError(f"algorithms cover different problem sets; missing cells: {missing}")

    dest = Path(destination)
    dest.mkdir(parents=True, exist_ok=True)
    doc = {
        "schema": REPORT_SCHEMA,
        "algorithms": algorithms,
        "problems": problems,
        "cells": cells,
    }
    json_path = dest / "report.json"
    json_path.write_text(json.dumps(doc, indent=2) + "\n")
    text_path = dest / "report.txt"
    text_path.write_text(_format_table(problems, algorithms, cells))
    return json_path, text_path
