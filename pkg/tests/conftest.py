"""Shared fixtures: the full benchmark grid is expensive (minutes), so it
runs once per session and every test that needs run records reuses it."""

import pytest

from swaylab.harness import ExperimentConfig, run_experiment

UNCONSTRAINED = ("pom3a", "pom3b", "pom3c", "xomo-flight", "xomo-ground",
                 "xomo-osp", "xomo-osp2")
CONSTRAINED = ("monrp-50-4-5-0-110", "monrp-50-4-5-0-090",
               "monrp-50-4-5-4-110", "monrp-50-4-5-4-090")


@pytest.fixture(scope="session")
def benchmark_records():
    """20-repeat grid over every scenario.

    Unconstrained scenarios also get the sampler baselines and the seeded
    (super-charged) evolutionary runs; the constrained ones get the three
    optimizers the head-to-head comparison needs.
    """
    unconstrained = run_experiment(ExperimentConfig(
        UNCONSTRAINED,
        ["sway2", "sway4", "nsga2", "spea2", "nsga2-sc", "spea2-sc"],
        repeats=20))
    constrained = run_experiment(ExperimentConfig(
        CONSTRAINED, ["sway4", "nsga2", "spea2"], repeats=20))
    return unconstrained + constrained
