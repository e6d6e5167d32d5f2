"""POM3: an agile-team simulation scoring completion, idle time and cost.

A project is a pool of requirements with drifting cost/value figures, only
partially visible at the start.  Teams run sprints: they prioritize the
visible backlog with one of five strategies, burn capacity through it, and
risk early cancellation with odds that grow with the sprint count.

Objectives: maximize completion rate, minimize idle rate, minimize overall
cost (spend per unit of delivered value — hiring more staff than the
backlog can absorb raises it).  The simulation is pure: all randomness is
pre-drawn from a generator
seeded only by the scenario seed, so repeated evaluations of the same
decisions agree exactly and paired what-if comparisons share their noise.

Numeric knobs the scenario tables do not pin down are module constants
below; every claim made about POM3 in this package is comparative across
optimizers sharing one scenario, never absolute.
"""

import numpy as np

from ..core import (MAXIMIZE, MINIMIZE, DecisionSchema, Dim, ProblemSpec)

MAX_SPRINTS = 25          # hard stop even without cancellation
WORK_PER_PERSON = 10.0    # capacity units per person per sprint
TEAM_SPAN = 10            # requirements one team is responsible for
CANCEL_RATE = 0.02        # cancellation odds per elapsed sprint
REVEAL_BASE = 0.10        # backlog fraction surfacing each sprint...
REVEAL_DYNAMISM = 0.30    # ...plus this much at maximal dynamism

PLAN_NAMES = ("cost-ascending", "cost-descending", "value-ascending",
              "value-descending", "cost/value-ascending")


class Pom3Scenario:
    """Decision ranges for one project profile."""

    def __init__(self, name, culture, criticality, criticality_modifier,
                 initial_known, inter_dependency, dynamism, sizes,
                 team_size, seed=1):
        self.name = name
        self.culture = culture
        self.criticality = criticality
        self.criticality_modifier = criticality_modifier
        self.initial_known = initial_known
        self.inter_dependency = inter_dependency
        self.dynamism = dynamism
        self.sizes = tuple(sizes)
        self.team_size = team_size
        self.seed = seed

    def schema(self):
        return DecisionSchema([
            Dim("culture", "continuous", *self.culture),
            Dim("criticality", "continuous", *self.criticality),
            Dim("criticality_modifier", "continuous",
                *self.criticality_modifier),
            Dim("initial_known", "continuous", *self.initial_known),
            Dim("inter_dependency", "continuous", *self.inter_dependency),
            Dim("dynamism", "continuous", *self.dynamism),
            Dim("size_index", "integer", 0, len(self.sizes) - 1),
            Dim("team_size", "continuous", *self.team_size),
            Dim("plan", "integer", 0, 4),
        ])


SCENARIOS = {
    "pom3a": Pom3Scenario(
        "pom3a", (0.10, 0.90), (0.82, 1.26), (0.02, 0.10), (0.40, 0.70),
        (0.0, 1.0), (1.0, 50.0), (3, 10, 30, 100, 300), (1.0, 44.0)),
    "pom3b": Pom3Scenario(
        "pom3b", (0.10, 0.90), (0.82, 1.26), (0.80, 0.95), (0.40, 0.70),
        (0.0, 1.0), (1.0, 50.0), (3, 10, 30), (1.0, 44.0)),
    "pom3c": Pom3Scenario(
        "pom3c", (0.50, 0.90), (0.82, 1.26), (0.02, 0.08), (0.20, 0.50),
        (0.0, 50.0), (40.0, 50.0), (30, 100, 300), (20.0, 44.0)),
}


def _priority_order(costs, values, plan):
    if plan == 0:
        key = costs
    elif plan == 1:
        key = -costs
    elif plan == 2:
        key = values
    elif plan == 3:
        key = -values
    else:
        key = costs / np.maximum(values, 1e-9)
    return np.argsort(key, kind="stable")


def pom3_evaluate(scenario, decisions, seed=None):
    """(completion_rate, idle_rate, total_cost) for one decision vector."""
    (culture, crit, crit_mod, known, inter_dep, dynamism,
     size_index, team_size, plan) = decisions
    plan = int(round(plan))
    size = scenario.sizes[int(round(size_index))]
    rng = np.random.default_rng(scenario.seed if seed is None else seed)

    costs = rng.uniform(1.0, 100.0, size)
    values = rng.uniform(1.0, 100.0, size)
    volatile = rng.random(size) < culture
    drift = rng.uniform(-0.5, 0.5, (MAX_SPRINTS, size))
    cancel_draw = rng.random(MAX_SPRINTS)
    reveal_order = rng.permutation(size)
    prereq_draw = rng.random(size)

    # dependent requirements wait for a lower-indexed prerequisite
    dep_frac = min(float(inter_dep), 100.0) / 100.0
    prereq = np.full(size, -1)
    dependents = np.flatnonzero(prereq_draw < dep_frac)
    for i in dependents:
        if i > 0:
            prereq[i] = int(prereq_draw[i] * i)

    teams = max(1, round(size / TEAM_SPAN))
    capacity = teams * team_size * WORK_PER_PERSON
    # the criticality premium hits the fraction of teams given by the
    # criticality modifier
    cost_rate = (1.0 - crit_mod) + crit_mod * crit

    n_visible = round(known * size)
    reveal_per_sprint = max(
        1, round(size * (REVEAL_BASE + REVEAL_DYNAMISM * dynamism / 50.0)))
    visible = np.zeros(size, dtype=bool)
    visible[reveal_order[:n_visible]] = True
    done = np.zeros(size, dtype=bool)

    total_cost = 0.0
    idle_sum = 0.0
    sprints = 0
    for t in range(MAX_SPRINTS):
        sprints += 1
        unlocked = (prereq < 0) | done[np.clip(prereq, 0, None)]
        backlog = np.flatnonzero(visible & ~done & unlocked)
        sprint_costs = costs.copy()
        sprint_costs[volatile] *= 1.0 + drift[t, volatile]
        sprint_costs = np.maximum(sprint_costs, 1.0)
        if backlog.size:
            order = backlog[_priority_order(
                sprint_costs[backlog], values[backlog], plan)]
            burn = np.cumsum(sprint_costs[order])
            fits = burn <= capacity
            done[order[fits]] = True
            worked = float(burn[fits][-1]) if fits.any() else 0.0
        else:
            worked = 0.0
        idle_sum += (capacity - worked) / capacity
        total_cost += capacity * cost_rate  # staff are paid, busy or idle
        if done.all():
            break
        if cancel_draw[t] < CANCEL_RATE * (t + 1):
            break
        n_visible = min(size, n_visible + reveal_per_sprint)
        visible[reveal_order[:n_visible]] = True

    completion = float(done.sum()) / size
    idle = idle_sum / sprints
    # cost is money spent per unit of delivered value: paying idle staff or
    # chasing low-value work both hurt it; a project that delivers nothing
    # is charged its full spend
    delivered = float(values[done].sum())
    cost = total_cost / delivered if delivered > 0 else total_cost
    return completion, idle, cost


def pom3_problem(name, seed=None, budget=None):
    """ProblemSpec for a named scenario; seed fixes the simulated project."""
    scenario = SCENARIOS[name.lower()]
    if seed is not None:
        scenario = Pom3Scenario(
            scenario.name, scenario.culture, scenario.criticality,
            scenario.criticality_modifier, scenario.initial_known,
            scenario.inter_dependency, scenario.dynamism, scenario.sizes,
            scenario.team_size, seed=seed)
    return ProblemSpec(
        scenario.name, scenario.schema(), [MAXIMIZE, MINIMIZE, MINIMIZE],
        lambda d: pom3_evaluate(scenario, d), budget=budget)
