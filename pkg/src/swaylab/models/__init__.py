"""Problem families: MONRP, POM3 and XOMO, each exposed as a ProblemSpec."""

from .monrp import (MonrpInstance, MonrpVariant, monrp_evaluate,
                    monrp_generate, monrp_problem, monrp_violation)
from .pom3 import Pom3Scenario, pom3_evaluate, pom3_problem
from .xomo import XomoScenario, load_risk_rules, xomo_evaluate, xomo_problem
from . import monrp, pom3, xomo

MONRP_NAMES = tuple(monrp.VARIANTS)
POM3_NAMES = tuple(pom3.SCENARIOS)
XOMO_NAMES = tuple(xomo.SCENARIOS)
SCENARIO_NAMES = POM3_NAMES + XOMO_NAMES + MONRP_NAMES


def make_problem(name, seed=0, budget=None):
    """Build the ProblemSpec for any named scenario.

    MONRP scenarios generate a fresh instance from ``seed``; POM3 uses it
    as the simulation seed; XOMO is deterministic and ignores it.
    """
    key = name.lower()
    if key in POM3_NAMES:
        return pom3_problem(key, seed=seed, budget=budget)
    if key in XOMO_NAMES:
        return xomo_problem(key, budget=budget)
    if key in MONRP_NAMES:
        return monrp_problem(MonrpVariant.named(key), seed, budget=budget)
    raise KeyError(f"unknown scenario {name!r}")
