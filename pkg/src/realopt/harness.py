"""Batch runner: seeded repeated trials, summary statistics, Friedman mean
ranks, one-parameter sweeps, a random-search baseline, and file export."""

from __future__ import annotations

import csv
import dataclasses
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import benchmarks, engineering
from .engine import RealParams, RunRecord, run
from .problem import Problem
from .rng import seeded_stream
from .space import SearchSpace

__all__ = [
    "ExperimentConfig",
    "StatSummary",
    "ConfigError",
    "resolve_problem",
    "budget_iterations",
    "run_experiment",
    "sweep",
    "friedman_rank",
    "load_rank_table",
    "paper_table_path",
    "random_search",
    "write_convergence_csv",
    "write_trajectory_csv",
    "write_summary_json",
    "SWEEP_BASELINE",
]

WORKERS_ENV = "REALOPT_WORKERS"

# Sensitivity-study baseline: benchmark parameters with a shorter horizon
# and the 1e-8 spread termination.
SWEEP_BASELINE = dict(iterations=500, term_tol=1e-8)


class ConfigError(ValueError):
    """Invalid experiment configuration or unknown problem id."""


# ---------------------------------------------------------------------------
# configuration


@dataclass
class ExperimentConfig:
    """One experiment: a problem, engine parameters, and repetitions."""

    problem: str = "F1"
    dimension: int | None = None
    reps: int = 30
    seed_base: int = 0
    params: RealParams = field(default_factory=RealParams)
    nfe_budget: int | None = None
    sweep_param: str | None = None
    sweep_values: list | None = None
    workers: int = 1

    def validate(self):
        if self.reps < 1:
            raise ConfigError("reps must be >= 1")
        if self.seed_base < 0:
            raise ConfigError("seed_base must be non-negative")
        if self.sweep_param is not None:
            if self.sweep_param not in {f.name for f in dataclasses.fields(RealParams)}:
                raise ConfigError(f"unknown sweep parameter {self.sweep_param!r}")
            if not self.sweep_values:
                raise ConfigError("sweep mode needs a non-empty value list")
        self.params.validate()

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["params"] = dataclasses.asdict(self.params)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        data = dict(data)
        params = data.pop("params", {})
        config = cls(**data)
        config.params = RealParams(**params)
        return config

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        return cls.from_dict(json.loads(text))


def apply_override(config: ExperimentConfig, key: str, raw: str) -> ExperimentConfig:
    """Apply one ``--set key=value`` override; params fields use a
    ``params.`` prefix or resolve as bare names."""
    param_fields = {f.name for f in dataclasses.fields(RealParams)}
    config_fields = {f.name for f in dataclasses.fields(ExperimentConfig)}
    value = _parse_scalar(raw)
    if key.startswith("params."):
        name = key[len("params."):]
        if name not in param_fields:
            raise ConfigError(f"unknown parameter {name!r}")
        config.params = config.params.with_overrides(**{name: value})
    elif key in param_fields:
        config.params = config.params.with_overrides(**{key: value})
    elif key in config_fields:
        setattr(config, key, value)
    else:
        raise ConfigError(f"unknown configuration key {key!r}")
    return config


def _parse_scalar(text: str):
    lowered = text.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    if lowered in ("none", "null"):
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


# ---------------------------------------------------------------------------
# problem resolution


def resolve_problem(problem_id: str, dimension: int | None = None, seed: int = 0) -> Problem:
    """Look up a problem id in the benchmark or engineering catalogs."""
    pid = problem_id.upper()
    if pid.startswith("B"):
        try:
            return engineering.get_problem(pid).as_problem()
        except KeyError as exc:
            raise ConfigError(str(exc)) from exc
    try:
        return benchmarks.get_problem(pid, dimension=dimension, seed=seed)
    except KeyError as exc:
        raise ConfigError(str(exc)) from exc


def budget_iterations(nfe_budget: int, n_agents: int) -> int:
    """Iteration count whose expected evaluation cost matches a budget,
    using the nominal 2.5 evaluations per agent and iteration."""
    iterations = round(nfe_budget / (2.5 * n_agents))
    return max(1, int(iterations))


# ---------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class StatSummary:
    """Aggregate of the final best values over repeated runs."""

    mean: float
    std: float
    best: float
    worst: float
    mean_nfe: float
    mean_wall_time: float
    reps: int

    @classmethod
    def from_records(cls, records: list[RunRecord]) -> "StatSummary":
        values = np.array([r.final_best[1] for r in records])
        std = float(values.std(ddof=1)) if values.size > 1 else 0.0
        return cls(
            mean=float(values.mean()),
            std=std,
            best=float(values.min()),
            worst=float(values.max()),
            mean_nfe=float(np.mean([r.nfe for r in records])),
            mean_wall_time=float(np.mean([r.wall_time for r in records])),
            reps=len(records),
        )

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "mean": self.mean, "std": self.std, "best": self.best,
            "worst": self.worst, "mean_nfe": self.mean_nfe, "reps": self.reps,
        }
        if include_timing:
            out["mean_wall_time"] = self.mean_wall_time
        return out


def _run_one(task) -> RunRecord:
    problem_id, dimension, params = task
    problem = resolve_problem(problem_id, dimension=dimension, seed=params.seed)
    return run(problem, params)


def run_experiment(config: ExperimentConfig) -> tuple[StatSummary, list[RunRecord]]:
    """Execute ``reps`` runs with seeds seed_base .. seed_base + reps - 1.

    Problem instances whose construction is seeded (compositions, the
    shifted-rotated Levy) are rebuilt from each run's seed. When an NFE
    budget is set the iteration count is derived from it. Runs may fan
    out over processes (workers > 1 or the REALOPT_WORKERS variable);
    aggregation is by run index either way.
    """
    config.validate()
    params = config.params
    if config.nfe_budget is not None:
        params = params.with_overrides(
            iterations=budget_iterations(config.nfe_budget, params.n_agents))
    tasks = [
        (config.problem, config.dimension, params.with_overrides(seed=config.seed_base + i))
        for i in range(config.reps)
    ]
    workers = int(os.environ.get(WORKERS_ENV, config.workers) or 1)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_one, tasks))
    else:
        records = [_run_one(task) for task in tasks]
    return StatSummary.from_records(records), records


def sweep(config: ExperimentConfig) -> list[tuple[object, StatSummary]]:
    """One-parameter sensitivity sweep.

    For each value, repeats the experiment with only that parameter
    changed; all other parameters come from the config (callers wanting
    the sensitivity baseline pass iterations=500, term_tol=1e-8).
    """
    config.validate()
    if config.sweep_param is None:
        raise ConfigError("sweep requires a sweep_param")
    rows = []
    for value in config.sweep_values:
        derived = ExperimentConfig(
            problem=config.problem,
            dimension=config.dimension,
            reps=config.reps,
            seed_base=config.seed_base,
            params=config.params.with_overrides(**{config.sweep_param: value}),
            nfe_budget=config.nfe_budget,
            workers=config.workers,
        )
        summary, _ = run_experiment(derived)
        rows.append((value, summary))
    return rows


# ---------------------------------------------------------------------------
# Friedman mean ranks


def _average_ranks(row: np.ndarray) -> np.ndarray:
    """Ranks 1..k ascending with ties sharing the average rank."""
    order = np.argsort(row, kind="stable")
    sorted_values = row[order]
    ranks = np.empty(row.size)
    i = 0
    position = 1
    while i < row.size:
        j = i
        while j + 1 < row.size and sorted_values[j + 1] == sorted_values[i]:
            j += 1
        ranks[order[i:j + 1]] = (position + position + (j - i)) / 2.0
        position += j - i + 1
        i = j + 1
    return ranks


def friedman_rank(matrix, direction: str = "min") -> np.ndarray:
    """Mean rank per column of a problems-by-algorithms value matrix.

    Rank 1 is best; ties receive averaged ranks. ``direction`` selects
    whether smaller or larger values are better.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ValueError("rank table must be a non-empty 2-D matrix")
    if np.isnan(matrix).any():
        raise ValueError("rank table contains NaN entries")
    if direction not in ("min", "max"):
        raise ValueError("direction must be 'min' or 'max'")
    signed = matrix if direction == "min" else -matrix
    ranks = np.vstack([_average_ranks(row) for row in signed])
    return ranks.mean(axis=0)


def paper_table_path(name: str) -> Path:
    """Path of a transcribed comparison table shipped with the package."""
    return Path(resources.files("realopt").joinpath(f"data/paper-tables/{name}"))


def load_rank_table(path) -> tuple[list[str], list[str], np.ndarray]:
    """Read a CSV rank table: header row of algorithm names after a
    leading problem column; returns (problems, algorithms, matrix)."""
    path = Path(path)
    with path.open(newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        algorithms = header[1:]
        problems = []
        rows = []
        for record in reader:
            if not record:
                continue
            problems.append(record[0])
            rows.append([float(cell) for cell in record[1:]])
    return problems, algorithms, np.array(rows)


# ---------------------------------------------------------------------------
# random-search baseline


@dataclass(frozen=True)
class RandomSearchRecord:
    best_point: np.ndarray
    best_value: float
    best_series: np.ndarray
    nfe: int


def random_search(problem: Problem, budget: int, seed: int) -> RandomSearchRecord:
    """Uniform sampling baseline with best-so-far tracking."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = seeded_stream(seed, "random-search")
    space = problem.space
    best_point = None
    best_value = math.inf
    series = np.empty(budget)
    for i in range(budget):
        x = space.snap(space.sample(rng))
        value = float(problem.objective(x))
        if not math.isfinite(value):
            value = math.inf
        if value < best_value:
            best_value = value
            best_point = x
        series[i] = best_value
    return RandomSearchRecord(best_point, best_value, series, budget)


# ---------------------------------------------------------------------------
# export


def write_convergence_csv(record: RunRecord, path):
    """Per-iteration best/worst archive values: ``iter,best,worst``."""
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["iter", "best", "worst"])
        for i, (b, w) in enumerate(zip(record.best_per_iter, record.worst_per_iter), start=1):
            writer.writerow([i, repr(float(b)), repr(float(w))])


def write_trajectory_csv(record: RunRecord, path):
    """Designated agent's solution series: ``step,x1..xn,f``."""
    path = Path(path)
    if not record.agent_trace:
        raise ValueError("run record holds no agent trace")
    ndim = record.agent_trace[0][0].size
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["step"] + [f"x{i}" for i in range(1, ndim + 1)] + ["f"])
        for step, (point, value) in enumerate(record.agent_trace, start=1):
            writer.writerow([step] + [repr(float(v)) for v in point] + [repr(float(value))])


def write_summary_json(config: ExperimentConfig, summary: StatSummary,
                       records: list[RunRecord], path):
    """Reproducibility record: full config echo, summary, per-run results.

    Wall-clock timings are deliberately omitted so identical config and
    seeds produce byte-identical files.
    """
    payload = {
        "config": config.to_dict(),
        "summary": summary.to_dict(include_timing=False),
        "runs": [
            {
                "seed": r.seed,
                "best": r.final_best[1],
                "best_point": [float(v) for v in r.final_best[0]],
                "nfe": r.nfe,
                "iterations_used": r.iterations_used,
            }
            for r in records
        ],
    }
    path = Path(path)
    with path.open("w") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")
