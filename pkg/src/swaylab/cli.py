"""Command-line entry point.

Subcommands:
  run <config>     execute an experiment config (TOML/JSON or the name of a
                   bundled preset) and persist records + report to --out
  report <dir>     re-render the report from a persisted run directory
  dim <scenario>   estimate the intrinsic dimension of a scenario's
                   sampled decision cloud
"""

import argparse
import sys
from importlib import resources

from .core import random_population
from .sway import normalized_matrix
from .harness import (ConfigError, ExperimentConfig, read_records,
                      run_experiment, write_records)
from .intrinsic import UndefinedDimension, intrinsic_dimension
from .models import SCENARIO_NAMES, make_problem
from .report import report


def _resolve_config(name):
    from pathlib import Path
    path = Path(name)
    if path.exists():
        return path
    bundled = resources.files("swaylab") / "presets" / f"{name}.toml"
    if bundled.is_file():
        return bundled
    raise ConfigError(f"no config file or bundled preset named {name!r}")


def _cmd_run(args):
    cfg_path = _resolve_config(args.config)
    config = ExperimentConfig.from_file(
        cfg_path, repeats=args.repeats, budget=args.budget,
        base_seed=args.seed, out_dir=args.out)
    records = run_experiment(config)
    write_records(records, config.out_dir)
    report(records, config.out_dir)
    print(f"{len(records)} runs -> {config.out_dir}")
    return 0


def _cmd_report(args):
    records = read_records(args.dir)
    if not records:
        raise ConfigError(f"no records found in {args.dir}")
    out = args.out if args.out is not None else args.dir
    report(records, out)
    print(f"report -> {out}")
    return 0


def _cmd_dim(args):
    scenario = args.scenario.lower()
    if scenario not in SCENARIO_NAMES:
        raise ConfigError(f"unknown scenario {args.scenario!r}")
    problem = make_problem(scenario, seed=args.seed)
    pop = random_population(problem, args.samples, args.seed)
    # normalize per-dim so wide-range dims do not dominate the distances
    cloud = normalized_matrix(pop, problem.schema)
    try:
        dim = intrinsic_dimension(cloud)
    except UndefinedDimension as exc:
        raise ConfigError(str(exc)) from exc
    actual = len(problem.schema.dims)
    print(f"{scenario}: intrinsic dimension ~= {dim:.2f} "
          f"(decision space has {actual} dims)")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="swaylab",
        description="Sampling-vs-evolution benchmark laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute an experiment config")
    p_run.add_argument("config",
                       help="config file path or bundled preset name")
    p_run.add_argument("--repeats", type=int, default=None)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--budget", type=int, default=None)
    p_run.add_argument("--out", default=None)
    p_run.set_defaults(func=_cmd_run)

    p_rep = sub.add_parser("report", help="re-render report from CSVs")
    p_rep.add_argument("dir")
    p_rep.add_argument("--out", default=None)
    p_rep.set_defaults(func=_cmd_report)

    p_dim = sub.add_parser("dim", help="intrinsic-dimension probe")
    p_dim.add_argument("scenario")
    p_dim.add_argument("--samples", type=int, default=1000)
    p_dim.add_argument("--seed", type=int, default=0)
    p_dim.set_defaults(func=_cmd_dim)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
