"""Multi-objective next release problem: instances, objectives, constraints.

A release plan assigns each requirement a release 1..P or 0 (aborted).
Objectives: maximize client-weighted release value plus risk coverage,
minimize total cost of released requirements, maximize total satisfaction.
Constraints: per-release cost within budget; a requirement may only be
released if its prerequisite is released no later than it.

Instance distributions (costs, weights, values, risks) are not dictated by
the problem statement; the defaults here are uniform draws, seedable, and
serialize to JSON so any experiment can be replayed bit-for-bit.
"""

import json
import math
import random

import numpy as np

from ..core import (MAXIMIZE, MINIMIZE, DecisionSchema, Dim, ProblemSpec)

VARIANTS = {
    "monrp-50-4-5-0-110": (50, 4, 5, 0, 110),
    "monrp-50-4-5-0-090": (50, 4, 5, 0, 90),
    "monrp-50-4-5-4-110": (50, 4, 5, 4, 110),
    "monrp-50-4-5-4-090": (50, 4, 5, 4, 90),
}


class MonrpVariant:
    def __init__(self, requirements=50, releases=4, clients=5,
                 density_pct=0, budget_pct=110):
        self.requirements = requirements
        self.releases = releases
        self.clients = clients
        self.density_pct = density_pct
        self.budget_pct = budget_pct

    @classmethod
    def named(cls, name):
        try:
            return cls(*VARIANTS[name.lower()])
        except KeyError:
            raise KeyError(f"unknown MONRP variant {name!r}") from None


class MonrpInstance:
    """Concrete problem data: costs, weights, values, risks, DAG, budgets."""

    def __init__(self, costs, weights, values, risks, edges, budgets):
        self.costs = np.asarray(costs, dtype=float)
        self.weights = np.asarray(weights, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self.risks = np.asarray(risks, dtype=float)
        self.edges = [tuple(e) for e in edges]
        self.budgets = np.asarray(budgets, dtype=float)
        n, m = self.values.shape
        if len(self.costs) != n or len(self.risks) != n:
            raise ValueError("inconsistent requirement count")
        if len(self.weights) != m:
            raise ValueError("inconsistent client count")
        self._check_acyclic()

    @property
    def n_requirements(self):
        return len(self.costs)

    @property
    def n_releases(self):
        return len(self.budgets)

    def _check_acyclic(self):
        # edges always point from lower to higher index in generated
        # instances; verify the general case with a DFS anyway
        adj = {}
        for i, j in self.edges:
            adj.setdefault(i, []).append(j)
        seen, stack = set(), set()

        def visit(u):
            if u in stack:
                raise ValueError("dependency graph has a cycle")
            if u in seen:
                return
            stack.add(u)
            for v in adj.get(u, ()):
                visit(v)
            stack.discard(u)
            seen.add(u)

        for u in list(adj):
            visit(u)

    def to_json(self):
        return json.dumps({
            "costs": self.costs.tolist(),
            "weights": self.weights.tolist(),
            "values": self.values.tolist(),
            "risks": self.risks.tolist(),
            "edges": [list(e) for e in self.edges],
            "budgets": self.budgets.tolist(),
        })

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(d["costs"], d["weights"], d["values"], d["risks"],
                   d["edges"], d["budgets"])


def monrp_generate(variant, seed):
    """Build a random instance for a variant row; deterministic per seed.

    density_pct percent of requirements receive one incoming dependency
    edge from a lower-indexed requirement (so the graph is a DAG); each
    release budget is budget_pct percent of the average per-release cost.
    """
    rng = random.Random(seed)
    n, p, m = variant.requirements, variant.releases, variant.clients
    costs = [rng.randint(1, 20) for _ in range(n)]
    weights = [rng.uniform(1, 5) for _ in range(m)]
    values = [[0 if rng.random() < 0.3 else rng.randint(0, 10)
               for _ in range(m)] for _ in range(n)]
    risks = [rng.uniform(0, 5) for _ in range(n)]
    n_edges = round(variant.density_pct / 100.0 * n)
    targets = rng.sample(range(1, n), n_edges) if n_edges else []
    edges = [(rng.randrange(0, j), j) for j in sorted(targets)]
    per_release = (variant.budget_pct / 100.0) * sum(costs) / p
    budgets = [per_release] * p
    return MonrpInstance(costs, weights, values, risks, edges, budgets)


def monrp_evaluate(instance, y, score_aborted=False):
    """(f1, f2, f3) for a release plan y in {0..P}^N.

    f1 sums, per client weight, the release-earliness-weighted value plus
    risk of every released requirement; f2 is total cost of released
    requirements; f3 is total client value of released requirements.
    ``score_aborted`` also credits aborted requirements in f1 (the literal
    all-i reading of the value sum); off by default since an aborted
    requirement should not outscore a release-1 one.
    """
    y = np.asarray(y, dtype=float)
    p = instance.n_releases
    if ((y < 0) | (y > p) | (y != np.round(y))).any():
        raise ValueError("plan entries must be integers in 0..P")
    released = y > 0
    mask = np.ones_like(released) if score_aborted else released
    earliness = (p + 1 - y) * mask
    value_term = earliness @ instance.values          # per-client sums
    risk_term = (instance.risks * mask).sum()
    f1 = float((instance.weights * (value_term + risk_term)).sum())
    f2 = float(instance.costs[released].sum())
    f3 = float(instance.values[released].sum())
    return f1, f2, f3


def monrp_violation(instance, y):
    """Sum of normalized per-release budget excesses plus violated edges.

    Edge (i, j) is violated when j is released but i is aborted or
    scheduled later than j.  Zero iff the plan is feasible.
    """
    y = np.asarray(y, dtype=float)
    total = 0.0
    for k in range(1, instance.n_releases + 1):
        cost_k = instance.costs[y == k].sum()
        br = instance.budgets[k - 1]
        total += max(0.0, cost_k - br) / br
    for i, j in instance.edges:
        if y[j] > 0 and (y[i] == 0 or y[i] > y[j]):
            total += 1.0
    return total


def monrp_problem(variant, seed, score_aborted=False, budget=None):
    """ProblemSpec wrapping a freshly generated instance."""
    inst = monrp_generate(variant, seed)
    p = variant.releases
    schema = DecisionSchema(
        [Dim(f"req{i}", "integer", 0, p)
         for i in range(variant.requirements)])
    name = (f"monrp-{variant.requirements}-{p}-{variant.clients}-"
            f"{variant.density_pct}-{variant.budget_pct:03d}")
    spec = ProblemSpec(
        name, schema, [MAXIMIZE, MINIMIZE, MAXIMIZE],
        lambda d: monrp_evaluate(inst, d, score_aborted),
        lambda d: monrp_violation(inst, d),
        budget=budget)
    spec.instance = inst
    spec.releases = p
    return spec
