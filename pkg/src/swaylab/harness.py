"""Experiment runner: scenarios x optimizers x repeats, persisted to CSV.

Repeat i of a scenario uses seed base_seed + i for every optimizer, so all
treatments see the same problem instance and the super-charged EAs are
seeded with that same repeat's SWAY4 survivors.  Each run gets a fresh
ProblemSpec (its own evaluation counter); records persist the raw-sense
front so reports can be regenerated without re-evaluating anything.
"""

import csv
import json
import time
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .core import (EvaluationBudget, evaluate, nondominated,
                   random_population)
from .models import MONRP_NAMES, SCENARIO_NAMES, make_problem
from .moea import MoeaConfig, nsga2, spea2
from .sway import SwayConfig, sway

OPTIMIZERS = ("sway2", "sway4", "nsga2", "spea2", "nsga2-sc", "spea2-sc")
SWAY2_POP = 100
SWAY4_POP = 10_000


class ConfigError(ValueError):
    """Unresolvable scenario/optimizer or malformed experiment config."""


class ExperimentConfig:
    def __init__(self, scenarios, optimizers, repeats=20, budget=2000,
                 base_seed=0, out_dir="runs"):
        self.scenarios = [s.lower() for s in scenarios]
        self.optimizers = [o.lower() for o in optimizers]
        self.repeats = int(repeats)
        self.budget = int(budget)
        self.base_seed = int(base_seed)
        self.out_dir = Path(out_dir)
        if self.repeats < 1:
            raise ConfigError("repeats must be >= 1")
        for s in self.scenarios:
            if s not in SCENARIO_NAMES:
                raise ConfigError(f"unknown scenario {s!r}")
        for o in self.optimizers:
            if o not in OPTIMIZERS:
                raise ConfigError(f"unknown optimizer {o!r}")

    @classmethod
    def from_file(cls, path, **overrides):
        path = Path(path)
        try:
            if path.suffix == ".toml":
                data = tomllib.loads(path.read_text())
            else:
                data = json.loads(path.read_text())
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        kwargs = {
            "scenarios": data.get("scenarios", []),
            "optimizers": data.get("optimizers", []),
            "repeats": data.get("repeats", 20),
            "budget": data.get("budget", 2000),
            "base_seed": data.get("seed", 0),
            "out_dir": data.get("out", "runs"),
        }
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)


class RunRecord:
    def __init__(self, scenario, optimizer, repeat, seed, eval_count,
                 front, wall_time, survivors=()):
        self.scenario = scenario
        self.optimizer = optimizer
        self.repeat = repeat
        self.seed = seed
        self.eval_count = eval_count
        self.front = [tuple(p) for p in front]  # raw-sense objectives
        # full survivor set for the sampling optimizers (the reported front
        # is its non-dominated subset); empty for the evolutionary runs
        self.survivors = [tuple(p) for p in survivors]
        self.wall_time = wall_time


def _sway_config(scenario, problem, seed):
    if scenario in MONRP_NAMES:
        return SwayConfig(seed=seed, split="monrp", releases=problem.releases)
    return SwayConfig(seed=seed)


def _run_sway(scenario, seed, pop_size):
    """Run the sampling optimizer, then evaluate every survivor so the
    reported front exists.  The returned eval count is the snapshot taken
    before that reporting pass: the cost of the optimization itself."""
    problem = make_problem(scenario, seed)
    pop = random_population(problem, pop_size, seed)
    survivors = sway(problem, pop, _sway_config(scenario, problem, seed))
    opt_evals = problem.evals
    for c in survivors:
        evaluate(problem, c)
    return problem, survivors, opt_evals


def run_one(scenario, optimizer, seed, budget, sway4_survivors=None):
    """One optimizer run; returns (RunRecord, survivors-or-None)."""
    start = time.perf_counter()
    survivors = None
    if optimizer in ("sway2", "sway4"):
        pop_size = SWAY2_POP if optimizer == "sway2" else SWAY4_POP
        problem, survivors, opt_evals = _run_sway(scenario, seed, pop_size)
        front = nondominated(survivors)
    else:
        problem = make_problem(scenario, seed,
                               budget=EvaluationBudget(budget))
        initial = None
        if optimizer.endswith("-sc"):
            if sway4_survivors is None:
                _, sway4_survivors, _ = _run_sway(scenario, seed, SWAY4_POP)
            initial = sway4_survivors
        config = MoeaConfig(max_evals=budget, seed=seed, initial_pop=initial)
        algo = nsga2 if optimizer.startswith("nsga2") else spea2
        front = algo(problem, config)
        opt_evals = problem.evals
    wall = time.perf_counter() - start
    record = RunRecord(
        scenario, optimizer, None, seed, opt_evals,
        [problem.raw_objectives(c) for c in front], wall,
        survivors=[problem.raw_objectives(c) for c in survivors or ()])
    return record, survivors


def run_experiment(config):
    """All scenario x optimizer x repeat cells, in a deterministic order."""
    records = []
    needs_sway4 = any(o == "sway4" or o.endswith("-sc")
                      for o in config.optimizers)
    for scenario in config.scenarios:
        for repeat in range(config.repeats):
            seed = config.base_seed + repeat
            sway4_survivors = None
            if needs_sway4:
                start = time.perf_counter()
                problem, sway4_survivors, sway4_evals = _run_sway(
                    scenario, seed, SWAY4_POP)
                sway4_wall = time.perf_counter() - start
            for optimizer in config.optimizers:
                if optimizer == "sway4" and sway4_survivors is not None:
                    front = nondominated(sway4_survivors)
                    record = RunRecord(
                        scenario, optimizer, repeat, seed, sway4_evals,
                        [problem.raw_objectives(c) for c in front],
                        sway4_wall,
                        survivors=[problem.raw_objectives(c)
                                   for c in sway4_survivors])
                else:
                    record, _ = run_one(scenario, optimizer, seed,
                                        config.budget, sway4_survivors)
                    record.repeat = repeat
                records.append(record)
    return records


def _write_points(path, records, attr):
    max_k = max((len(getattr(r, attr)[0]) for r in records
                 if getattr(r, attr)), default=0)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["scenario", "optimizer", "repeat", "point"]
                   + [f"f{i + 1}" for i in range(max_k)])
        for r in records:
            for i, point in enumerate(getattr(r, attr)):
                row = [r.scenario, r.optimizer, r.repeat, i]
                row += [repr(v) for v in point]
                row += [""] * (max_k - len(point))
                w.writerow(row)


def _read_points(path):
    points = {}
    if not path.exists():
        return points
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["scenario"], row["optimizer"], int(row["repeat"]))
            point = tuple(float(row[c]) for c in row
                          if c.startswith("f") and row[c] != "")
            points.setdefault(key, []).append((int(row["point"]), point))
    return points


def write_records(records, out_dir):
    """Persist records: summary.csv, fronts.csv (one row per reported front
    point) and survivors.csv (full survivor sets of the sampling runs)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "summary.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["scenario", "optimizer", "repeat", "seed", "eval_count",
                    "front_size"])
        for r in records:
            w.writerow([r.scenario, r.optimizer, r.repeat, r.seed,
                        r.eval_count, len(r.front)])
    # wall times vary between runs of the same config, so they live apart
    # from the deterministic, byte-reproducible files above
    with open(out_dir / "timings.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["scenario", "optimizer", "repeat", "wall_time"])
        for r in records:
            w.writerow([r.scenario, r.optimizer, r.repeat,
                        repr(r.wall_time)])
    _write_points(out_dir / "fronts.csv", records, "front")
    _write_points(out_dir / "survivors.csv", records, "survivors")


def read_records(out_dir):
    """Rebuild RunRecords from the CSV trio; lossless for numeric fields."""
    out_dir = Path(out_dir)
    fronts = _read_points(out_dir / "fronts.csv")
    survivors = _read_points(out_dir / "survivors.csv")
    timings = {}
    if (out_dir / "timings.csv").exists():
        with open(out_dir / "timings.csv", newline="") as fh:
            for row in csv.DictReader(fh):
                key = (row["scenario"], row["optimizer"],
                       int(row["repeat"]))
                timings[key] = float(row["wall_time"])
    records = []
    with open(out_dir / "summary.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["scenario"], row["optimizer"], int(row["repeat"]))
            pts = [p for _, p in sorted(fronts.get(key, []))]
            surv = [p for _, p in sorted(survivors.get(key, []))]
            records.append(RunRecord(
                row["scenario"], row["optimizer"], int(row["repeat"]),
                int(row["seed"]), int(row["eval_count"]), pts,
                timings.get(key, 0.0), survivors=surv))
    return records
