"""Command-line front end.

Three subcommands bind the catalog, optimizers and harness together:

* ``run``          one seeded optimizer run -> run.json + curve.csv
* ``bench``        a problems x algorithms trial matrix -> report.json/.txt
* ``constrained``  the engineering problems -> best feasible solution found

Every invocation writes back the fully resolved configuration (defaults
applied, flags merged over any ``--config`` file), so each output is
self-describing and exactly reproducible. Exit codes: 0 success, 2 usage
error, 3 no feasible solution found, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .constrained import CONSTRAINED_IDS, constrained_problem
from .harness import (
    ALGORITHMS,
    CONFIG_TYPES,
    compare_report,
    export_convergence,
    run_matrix,
    run_one,
    run_trial_records,
    summarize,
)

RUN_SCHEMA = "beetleswarm-run-v1"
CONSTRAINED_SCHEMA = "beetleswarm-constrained-v1"

# Keys a --config file may carry besides optimizer tunables.
RUN_LEVEL_KEYS = {"algorithm", "problem", "problems", "algorithms", "n_trials", "base_seed", "seed", "out"}


class UsageError(Exception):
    """Bad invocation; reported on stderr with exit code 2."""


def _load_config_file(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a JSON object")
    return data


def _check_algorithm(algo: str) -> str:
    algo = str(algo).lower()
    if algo not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {algo!r} (choose from {', '.join(ALGORITHMS)})")
    return algo


def _algo_list(value) -> list[str]:
    if isinstance(value, (list, tuple)):
        return [_check_algorithm(a) for a in value]
    return [_check_algorithm(a) for a in str(value).split(",") if a.strip()]


def _int_setting(file_cfg: dict, key: str, default: int) -> int:
    try:
        return int(file_cfg.get(key, default))
    except (TypeError, ValueError):
        raise UsageError(f"config key {key!r} must be an integer")


def _check_problem(problem_id: str) -> str:
    key = str(problem_id).upper()
    if key not in catalog.problem_ids():
        raise UsageError(f"unknown problem {problem_id}")
    return key


def _expand_problems(spec_str) -> list[str]:
    """Comma list with F-range support: "F1..F4,F16" -> F1 F2 F3 F4 F16."""
    if isinstance(spec_str, (list, tuple)):
        spec_str = ",".join(str(v) for v in spec_str)
    out: list[str] = []
    for part in str(spec_str).split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            left, right = part.split("..", 1)
            left, right = left.strip().upper(), right.strip().upper()
            if not (left.startswith("F") and right.startswith("F")):
                raise UsageError(f"bad problem range {part!r}; ranges use benchmark ids like F1..F13")
            try:
                lo, hi = int(left[1:]), int(right[1:])
            except ValueError:
                raise UsageError(f"bad problem range {part!r}")
            if lo > hi:
                raise UsageError(f"empty problem range {part!r}")
            out.extend(_check_problem(f"F{i}") for i in range(lo, hi + 1))
        else:
            out.append(_check_problem(part))
    if not out:
        raise UsageError("no problems given")
    return out


def _build_config(algo: str, file_cfg: dict, args, *, seed_key: str = "seed"):
    """Resolve one algorithm's config: defaults < config file < flags."""
    cfg_type = CONFIG_TYPES[algo]
    tunables = {k: v for k, v in file_cfg.items() if k not in RUN_LEVEL_KEYS}
    if getattr(args, "iters", None) is not None:
        tunables["max_iters"] = args.iters
    if getattr(args, "pop", None) is not None and algo != "bas":
        tunables["n"] = args.pop
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = _int_setting(file_cfg, seed_key, 0)
    tunables["seed"] = int(seed)
    try:
        return cfg_type.from_dict(tunables)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad {algo} config: {exc}")


def _resolve_out(args, file_cfg: dict, default: str) -> Path:
    out = args.out if args.out is not None else file_cfg.get("out", default)
    return Path(out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_run(args) -> int:
    file_cfg = _load_config_file(args.config) if args.config else {}
    algo = _check_algorithm(args.algo or file_cfg.get("algorithm", "bso"))
    problem_id = args.problem or file_cfg.get("problem")
    if problem_id is None:
        raise UsageError("no problem given (use --problem or a config file)")
    problem_id = _check_problem(problem_id)
    config = _build_config(algo, file_cfg, args)

    problem = catalog.get_problem(problem_id)
    record = run_one(algo, problem, config, config.seed)

    out_dir = _resolve_out(args, file_cfg, ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    export_convergence(record, out_dir / "curve.csv")
    doc = {"schema": RUN_SCHEMA, **record.to_dict()}
    (out_dir / "run.json").write_text(json.dumps(doc, indent=2) + "\n")

    print(
        f"{algo} on {problem_id}: best_f={record.best_f:.6g} "
        f"after {record.curve.size - 1} iterations ({record.wall_time_s:.3f}s) -> {out_dir}"
    )
    return 0


def cmd_bench(args) -> int:
    if args.list:
        print(json.dumps(catalog.list_problems(), indent=2))
        return 0
    file_cfg = _load_config_file(args.config) if args.config else {}
    algos = _algo_list(args.algos if args.algos else file_cfg.get("algorithms", "bso"))
    problems = _expand_problems(args.problems if args.problems else file_cfg.get("problems", ""))
    n_trials = args.trials if args.trials is not None else _int_setting(file_cfg, "n_trials", 30)
    if n_trials < 1:
        raise UsageError("--trials must be at least 1")
    base_seed = args.seed if args.seed is not None else _int_setting(file_cfg, "base_seed", 0)

    configs = {}
    for algo in algos:
        ns = argparse.Namespace(iters=args.iters, pop=args.pop, seed=base_seed)
        configs[algo] = _build_config(algo, file_cfg, ns, seed_key="base_seed")

    summaries = run_matrix(algos, problems, configs, n_trials, base_seed)

    out_dir = _resolve_out(args, file_cfg, "bench-out")
    json_path, text_path = compare_report(summaries, out_dir)
    sys.stdout.write(text_path.read_text())
    print(f"report written to {json_path} and {text_path}")
    return 0


def cmd_constrained(args) -> int:
    file_cfg = _load_config_file(args.config) if args.config else {}
    problem_id = (args.problem or file_cfg.get("problem", "")).upper()
    if problem_id not in CONSTRAINED_IDS:
        raise UsageError(
            f"unknown constrained problem {args.problem!r} (choose from {', '.join(CONSTRAINED_IDS).lower()})"
        )
    algo = _check_algorithm(args.algo or file_cfg.get("algorithm", "bso"))
    n_trials = args.trials if args.trials is not None else _int_setting(file_cfg, "n_trials", 30)
    if n_trials < 1:
        raise UsageError("--trials must be at least 1")
    base_seed = args.seed if args.seed is not None else _int_setting(file_cfg, "base_seed", 0)
    ns = argparse.Namespace(iters=args.iters, pop=args.pop, seed=base_seed)
    config = _build_config(algo, file_cfg, ns, seed_key="base_seed")

    cp = constrained_problem(problem_id)
    problem = catalog.get_problem(problem_id)
    records = run_trial_records(algo, problem, config, n_trials, base_seed)
    summary = summarize(records)

    evaluations = []
    for r in records:
        rep = cp.report(r.best_x)
        rep["penalized"] = r.best_f
        rep["seed"] = r.seed
        evaluations.append(rep)
    feasible = [e for e in evaluations if e["feasible"]]
    best = (
        min(feasible, key=lambda e: e["raw_objective"])
        if feasible
        else min(evaluations, key=lambda e: e["penalized"])
    )

    doc = {
        "schema": CONSTRAINED_SCHEMA,
        "problem": problem_id,
        "algorithm": algo,
        "n_trials": n_trials,
        "feasible_trials": len(feasible),
        "best": best,
        "summary": summary.to_dict(),
        "config": {**config.to_dict(), "base_seed": base_seed},
    }
    if args.out is not None or "out" in file_cfg:
        out_dir = _resolve_out(args, file_cfg, ".")
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "constrained.json").write_text(json.dumps(doc, indent=2) + "\n")

    xs = "  ".join(f"x{i + 1}={v:.6f}" for i, v in enumerate(best["x"]))
    gs = "  ".join(f"g{i + 1}={v:.6f}" for i, v in enumerate(best["g"]))
    if feasible:
        print(f"{problem_id} best feasible solution over {n_trials} trials ({len(feasible)} feasible):")
        print(f"  {xs}")
        print(f"  {gs}")
        print(f"  objective={best['raw_objective']:.6f}  penalized={best['penalized']:.6f}")
        return 0
    print(f"{problem_id}: no feasible solution found in {n_trials} trials; best infeasible point:")
    print(f"  {xs}")
    print(f"  {gs}")
    print(f"  objective={best['raw_objective']:.6f}  penalized={best['penalized']:.6f}")
    return 3


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beetleswarm",
        description="Beetle swarm optimization toolkit (BSO / BAS / PSO)",
        epilog="Set BSO_THREADS=N to run independent trials in N worker processes; "
        "results are identical to a serial run.",
    )
    sub = parser.add_subparsers(dest="command")

    run_p = sub.add_parser("run", help="one seeded optimizer run")
    run_p.add_argument("--algo", help="bso, bas or pso")
    run_p.add_argument("--problem", help="problem id (F1..F23, PV, HB)")
    run_p.add_argument("--iters", type=int, help="iteration budget")
    run_p.add_argument("--pop", type=int, help="population size (ignored by bas)")
    run_p.add_argument("--seed", type=int, help="random seed")
    run_p.add_argument("--out", help="output directory (default: current directory)")
    run_p.add_argument("--config", help="JSON config file; flags override its values")
    run_p.set_defaults(handler=cmd_run)

    bench_p = sub.add_parser("bench", help="trial matrix over problems and algorithms")
    bench_p.add_argument("--algos", help="comma list, e.g. bso,pso")
    bench_p.add_argument("--problems", help="comma list with ranges, e.g. F1..F13,F16")
    bench_p.add_argument("--trials", type=int, help="trials per cell (default 30)")
    bench_p.add_argument("--seed", type=int, help="base seed; trial i uses seed base+i")
    bench_p.add_argument("--iters", type=int, help="iteration budget per run")
    bench_p.add_argument("--pop", type=int, help="population size per run")
    bench_p.add_argument("--out", help="report directory (default: bench-out)")
    bench_p.add_argument("--config", help="JSON config file; flags override its values")
    bench_p.add_argument("--list", action="store_true", help="print the problem catalog and exit")
    bench_p.set_defaults(handler=cmd_bench)

    con_p = sub.add_parser("constrained", help="penalty-handled engineering problems")
    con_p.add_argument("--problem", help="pv or hb")
    con_p.add_argument("--algo", help="bso (default), bas or pso")
    con_p.add_argument("--iters", type=int, help="iteration budget per run")
    con_p.add_argument("--pop", type=int, help="population size per run")
    con_p.add_argument("--trials", type=int, help="trials (default 30)")
    con_p.add_argument("--seed", type=int, help="base seed")
    con_p.add_argument("--out", help="write constrained.json here")
    con_p.add_argument("--config", help="JSON config file; flags override its values")
    con_p.set_defaults(handler=cmd_constrained)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "command", None) is None:
        parser.print_help()
        return 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
