"""Problem abstraction, candidates, evaluation accounting and Pareto predicates.

Objectives are stored internally in minimization form: objectives declared
as "max" are negated when the evaluator's raw values are recorded on a
candidate.  This keeps a single domination predicate everywhere; use
``ProblemSpec.raw_objectives`` to recover values in their natural sense.
"""

import math

import numpy as np

MINIMIZE = "min"
MAXIMIZE = "max"


class BoundsError(ValueError):
    """Decision vector falls outside the schema bounds."""


class BudgetExhausted(RuntimeError):
    """An evaluation was requested after the budget was consumed."""


class Dim:
    """One decision dimension: continuous or integer, with inclusive bounds."""

    __slots__ = ("name", "kind", "low", "high")

    def __init__(self, name, kind, low, high):
        if kind not in ("continuous", "integer"):
            raise ValueError("kind must be 'continuous' or 'integer'")
        if low > high:
            raise ValueError(f"dim {name}: low {low} > high {high}")
        if kind == "integer" and (low != int(low) or high != int(high)):
            raise ValueError(f"integer dim {name} needs integral bounds")
        self.name = name
        self.kind = kind
        self.low = float(low)
        self.high = float(high)

    def clip(self, x):
        x = min(max(x, self.low), self.high)
        if self.kind == "integer":
            x = float(round(x))
        return x

    def sample(self, rng):
        if self.kind == "integer":
            return float(rng.randint(int(self.low), int(self.high)))
        return rng.uniform(self.low, self.high)

    def __repr__(self):
        return f"Dim({self.name!r}, {self.kind!r}, {self.low}, {self.high})"


class DecisionSchema:
    """An ordered list of decision dimensions."""

    def __init__(self, dims):
        dims = list(dims)
        if not dims:
            raise ValueError("schema needs at least one dimension")
        self.dims = dims

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def contains(self, decisions):
        if len(decisions) != len(self.dims):
            return False
        for x, d in zip(decisions, self.dims):
            if x < d.low or x > d.high:
                return False
            if d.kind == "integer" and x != round(x):
                return False
        return True

    def check(self, decisions):
        if not self.contains(decisions):
            raise BoundsError(f"decisions {decisions!r} violate schema bounds")

    def normalize(self, decisions):
        """Map decisions into [0,1] per dim using the schema bounds."""
        out = []
        for x, d in zip(decisions, self.dims):
            span = d.high - d.low
            out.append(0.0 if span == 0 else (x - d.low) / span)
        return tuple(out)


class Candidate:
    """Decision vector plus lazily-filled objectives and violation scalar."""

    __slots__ = ("decisions", "objectives", "violation")

    def __init__(self, decisions):
        self.decisions = tuple(float(x) for x in decisions)
        self.objectives = None
        self.violation = None

    @property
    def evaluated(self):
        return self.objectives is not None

    def __repr__(self):
        return f"Candidate({self.decisions}, obj={self.objectives})"


class EvaluationBudget:
    def __init__(self, max_evals):
        if max_evals < 1:
            raise ValueError("max_evals must be positive")
        self.max_evals = int(max_evals)


class ProblemSpec:
    """Named optimization problem: schema, senses, evaluator, constraints.

    ``evaluate_fn(decisions)`` returns raw objective values in their natural
    sense; ``violation_fn(decisions)`` (optional) returns a non-negative
    scalar, 0 when feasible.  The evaluation counter increases by exactly 1
    per distinct candidate whose objectives get computed.
    """

    def __init__(self, name, schema, senses, evaluate_fn, violation_fn=None,
                 budget=None):
        for s in senses:
            if s not in (MINIMIZE, MAXIMIZE):
                raise ValueError(f"bad sense {s!r}")
        self.name = name
        self.schema = schema
        self.senses = list(senses)
        self.evaluate_fn = evaluate_fn
        self.violation_fn = violation_fn
        self.budget = budget
        self.evals = 0

    @property
    def n_objectives(self):
        return len(self.senses)

    def to_min(self, raw):
        return tuple(-v if s == MAXIMIZE else float(v)
                     for v, s in zip(raw, self.senses))

    def raw_objectives(self, candidate):
        """Candidate objectives converted back to their natural sense."""
        return tuple(-v if s == MAXIMIZE else v
                     for v, s in zip(candidate.objectives, self.senses))


def evaluate(problem, candidate):
    """Evaluate a candidate, caching the result; counts distinct evals only."""
    if candidate.evaluated:
        return candidate.objectives
    problem.schema.check(candidate.decisions)
    if problem.budget is not None and problem.evals >= problem.budget.max_evals:
        raise BudgetExhausted(
            f"{problem.name}: budget of {problem.budget.max_evals} consumed")
    raw = problem.evaluate_fn(candidate.decisions)
    if len(raw) != problem.n_objectives:
        raise ValueError("evaluator returned wrong objective count")
    candidate.objectives = problem.to_min(raw)
    if problem.violation_fn is not None:
        candidate.violation = float(problem.violation_fn(candidate.decisions))
    else:
        candidate.violation = 0.0
    problem.evals += 1
    return candidate.objectives


def random_population(problem, n, seed):
    """n candidates drawn uniformly within bounds; consumes no evaluations.

    Integer dims are uniform on [low, high] inclusive, continuous dims on
    the half-open [low, high).  Column-wise numpy draws keep generating a
    10^4 population cheap; deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    cols = []
    for d in problem.schema:
        if d.kind == "integer":
            cols.append(rng.integers(int(d.low), int(d.high) + 1,
                                     size=n).astype(float))
        else:
            cols.append(rng.uniform(d.low, d.high, size=n))
    return [Candidate(row) for row in np.column_stack(cols)]


def dominates(a, b, senses=None):
    """Binary Pareto domination on minimization-form objective vectors.

    ``senses`` aligns raw-sense vectors first; pass None when both vectors
    are already in minimization form.
    """
    if len(a) != len(b):
        raise ValueError("objective vectors differ in length")
    if senses is not None:
        a = [-v if s == MAXIMIZE else v for v, s in zip(a, senses)]
        b = [-v if s == MAXIMIZE else v for v, s in zip(b, senses)]
    no_worse = all(x <= y for x, y in zip(a, b))
    better = any(x < y for x, y in zip(a, b))
    return no_worse and better


def constrained_dominates(a, b):
    """Deb's rule: feasibility first, then violation, then Pareto domination."""
    va = a.violation or 0.0
    vb = b.violation or 0.0
    if va == 0.0 and vb > 0.0:
        return True
    if va > 0.0 and vb == 0.0:
        return False
    if va > 0.0 and vb > 0.0:
        return va < vb
    return dominates(a.objectives, b.objectives)


def nondominated(candidates):
    """The mutually non-dominated subset (constrained domination)."""
    front = []
    for c in candidates:
        if any(constrained_dominates(o, c) for o in candidates if o is not c):
            continue
        front.append(c)
    return front


def euclidean(u, v):
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(u, v)))
