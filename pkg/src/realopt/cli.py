"""Command-line interface: run, suite, sweep, rank, oracle, trace."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import benchmarks, engineering
from .engine import RealParams, run
from .harness import (
    SWEEP_BASELINE,
    ConfigError,
    ExperimentConfig,
    StatSummary,
    apply_override,
    budget_iterations,
    friedman_rank,
    load_rank_table,
    paper_table_path,
    resolve_problem,
    run_experiment,
    sweep,
    write_convergence_csv,
    write_summary_json,
    write_trajectory_csv,
)


def _build_config(args) -> ExperimentConfig:
    if getattr(args, "config", None):
        config = ExperimentConfig.from_json(Path(args.config).read_text())
    else:
        config = ExperimentConfig()
    if getattr(args, "problem", None):
        config.problem = args.problem
    if getattr(args, "dim", None) is not None:
        config.dimension = args.dim
    if getattr(args, "reps", None) is not None:
        config.reps = args.reps
    if getattr(args, "seed_base", None) is not None:
        config.seed_base = args.seed_base
    if getattr(args, "budget", None) is not None:
        config.nfe_budget = args.budget
    for item in getattr(args, "set", None) or []:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, _, value = item.partition("=")
        apply_override(config, key.strip(), value.strip())
    return config


def _print_summary(label: str, summary: StatSummary, display=lambda v: v):
    print(f"{label}: best={display(summary.best):.10g} mean={display(summary.mean):.10g} "
          f"worst={display(summary.worst):.10g} std={summary.std:.4g} "
          f"mean_nfe={summary.mean_nfe:.1f}")


def _engineering_display(problem_id: str):
    constrained = engineering.get_problem(problem_id)
    return constrained.display_value


def _cmd_run(args) -> int:
    config = _build_config(args)
    summary, records = run_experiment(config)
    display = (_engineering_display(config.problem)
               if config.problem.upper().startswith("B") else (lambda v: v))
    _print_summary(config.problem, summary, display)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        write_summary_json(config, summary, records, out / "summary.json")
        write_convergence_csv(records[0], out / "convergence_run0.csv")
        print(f"wrote {out / 'summary.json'}")
    return 0


def _cmd_suite(args) -> int:
    config_base = _build_config(args)
    group = args.group
    ids = []
    if group in ("benchmarks", "all"):
        ids += [pid for pid in benchmarks.catalog_ids() if pid.startswith("F")]
    if group in ("engineering", "all"):
        ids += engineering.engineering_ids()
    rows = []
    for pid in ids:
        config = ExperimentConfig.from_dict(config_base.to_dict())
        config.problem = pid
        config.dimension = None
        if pid.startswith("B"):
            config.nfe_budget = engineering.NFE_BUDGETS[pid]
            # engineering comparisons spend the whole budget
            config.params = config.params.with_overrides(term_tol=None)
        summary, _ = run_experiment(config)
        display = _engineering_display(pid) if pid.startswith("B") else (lambda v: v)
        _print_summary(pid, summary, display)
        rows.append((pid, display(summary.best), display(summary.mean),
                     display(summary.worst), summary.std, summary.mean_nfe))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with (out / "suite_summary.csv").open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["problem", "best", "mean", "worst", "std", "mean_nfe"])
            writer.writerows(rows)
        print(f"wrote {out / 'suite_summary.csv'}")
    return 0


def _cmd_sweep(args) -> int:
    config = _build_config(args)
    config.sweep_param = args.param
    config.sweep_values = [float(v) if "." in v or "e" in v.lower() else int(v)
                           for v in args.values.split(",")]
    config.params = config.params.with_overrides(**SWEEP_BASELINE)
    for item in args.set or []:
        key, _, value = item.partition("=")
        apply_override(config, key.strip(), value.strip())
    rows = sweep(config)
    header = f"{'value':>12} {'mean':>14} {'std':>12} {'best':>14} {'worst':>14} {'nfe':>10}"
    print(header)
    for value, summary in rows:
        print(f"{value!s:>12} {summary.mean:>14.6g} {summary.std:>12.5g} "
              f"{summary.best:>14.6g} {summary.worst:>14.6g} {summary.mean_nfe:>10.1f}")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with (out / "sweep.csv").open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow([args.param, "mean", "std", "best", "worst", "mean_nfe"])
            for value, summary in rows:
                writer.writerow([value, summary.mean, summary.std,
                                 summary.best, summary.worst, summary.mean_nfe])
        print(f"wrote {out / 'sweep.csv'}")
    return 0


def _cmd_rank(args) -> int:
    if args.paper_table:
        path = paper_table_path(
            {"cec2014": "cec2014_ave.csv", "classic29": "classic29_ave.csv"}[args.paper_table])
    else:
        if not args.matrix:
            raise ConfigError("rank needs --matrix FILE or --paper-table NAME")
        path = Path(args.matrix)
    problems, algorithms, matrix = load_rank_table(path)
    ranks = friedman_rank(matrix, direction=args.direction)
    order = np.argsort(ranks)
    print(f"Friedman mean ranks over {len(problems)} problems:")
    for i in order:
        print(f"  {algorithms[i]:<10} {ranks[i]:.4f}")
    return 0


def _cmd_oracle(args) -> int:
    if args.target != "clutch":
        raise ConfigError(f"unknown oracle target {args.target!r}")
    best_x, best_f = engineering.brute_force_clutch()
    print(f"clutch brute force: f={best_f:.9f} at x={best_x.tolist()}")
    return 0


def _cmd_trace(args) -> int:
    config = _build_config(args)
    params = config.params.with_overrides(seed=config.seed_base)
    if config.nfe_budget is not None:
        params = params.with_overrides(
            iterations=budget_iterations(config.nfe_budget, params.n_agents))
    problem = resolve_problem(config.problem, dimension=config.dimension,
                              seed=config.seed_base)
    record = run(problem, params)
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    write_convergence_csv(record, out / "convergence.csv")
    write_trajectory_csv(record, out / "trajectory.csv")
    print(f"{config.problem}: best={record.final_best[1]:.10g} after "
          f"{record.iterations_used} iterations, nfe={record.nfe}")
    print(f"wrote {out / 'convergence.csv'} and {out / 'trajectory.csv'}")
    return 0


def _add_common(parser, with_problem=True):
    if with_problem:
        parser.add_argument("--problem", help="problem id (F1..F29, LEVY-SR-10, B01..B07)")
        parser.add_argument("--dim", type=int, help="dimension for scalable benchmarks")
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--reps", type=int, help="independent runs")
    parser.add_argument("--seed-base", type=int, dest="seed_base", help="first run seed")
    parser.add_argument("--budget", type=int, help="NFE budget (derives the iteration count)")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--set", action="append", metavar="KEY=VALUE",
                        help="override any config scalar, e.g. params.iterations=50")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="realopt",
                                     description="Rotation-excursion optimizer toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one experiment")
    _add_common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_suite = sub.add_parser("suite", help="run the benchmark and/or engineering suites")
    p_suite.add_argument("--group", choices=("benchmarks", "engineering", "all"),
                         default="all")
    _add_common(p_suite, with_problem=False)
    p_suite.set_defaults(func=_cmd_suite)

    p_sweep = sub.add_parser("sweep", help="one-parameter sensitivity sweep")
    p_sweep.add_argument("--param", required=True, help="RealParams field to vary")
    p_sweep.add_argument("--values", required=True, help="comma-separated values")
    _add_common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_rank = sub.add_parser("rank", help="Friedman mean ranks over a CSV matrix")
    p_rank.add_argument("--matrix", help="CSV file: problem column plus one column per algorithm")
    p_rank.add_argument("--paper-table", choices=("cec2014", "classic29"),
                        help="use a bundled transcribed comparison table")
    p_rank.add_argument("--direction", choices=("min", "max"), default="min")
    p_rank.set_defaults(func=_cmd_rank)

    p_oracle = sub.add_parser("oracle", help="exhaustive reference searches")
    p_oracle.add_argument("target", choices=("clutch",))
    p_oracle.set_defaults(func=_cmd_oracle)

    p_trace = sub.add_parser("trace", help="single seeded run with trace export")
    _add_common(p_trace)
    p_trace.set_defaults(func=_cmd_trace)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
