"""XOMO: COCOMO-family model of effort, schedule, defects and project risk.

Effort follows the COCOMO-II post-architecture form a*KSLOC^b*prod(EM)
with the published coefficient tables; schedule (months) comes from the
matching schedule equation; defects from a multiplicative introduction
model; risk is the fraction of triggered rules from a configurable rule
table (e.g. demanding high reliability from low-capability analysts).

Ratings are ordinal 1..6 (very low .. extra high).  Ratings a table does
not define are clamped to its nearest defined value.  All four objectives
are minimized.
"""

import json
from importlib import resources

from ..core import MINIMIZE, DecisionSchema, Dim, ProblemSpec

# COCOMO-II.2000 calibration
EFFORT_A = 2.94
EFFORT_B = 0.91
SCHED_C = 3.67
SCHED_D = 0.28

# scale factors, ratings 1..6
SCALE_FACTORS = {
    "prec": (6.20, 4.96, 3.72, 2.48, 1.24, 0.00),
    "flex": (5.07, 4.05, 3.04, 2.03, 1.01, 0.00),
    "resl": (7.07, 5.65, 4.24, 2.83, 1.41, 0.00),
    "team": (5.48, 4.38, 3.29, 2.19, 1.10, 0.00),
    "pmat": (7.80, 6.24, 4.68, 3.12, 1.56, 0.00),
}

# effort multipliers, ratings 1..6, undefined ratings clamped to the edge
EFFORT_MULTIPLIERS = {
    "rely": (0.82, 0.92, 1.00, 1.10, 1.26, 1.26),
    "data": (0.90, 0.90, 1.00, 1.14, 1.28, 1.28),
    "cplx": (0.73, 0.87, 1.00, 1.17, 1.34, 1.74),
    "ruse": (0.95, 0.95, 1.00, 1.07, 1.15, 1.24),
    "docu": (0.81, 0.91, 1.00, 1.11, 1.23, 1.23),
    "time": (1.00, 1.00, 1.00, 1.11, 1.29, 1.63),
    "stor": (1.00, 1.00, 1.00, 1.05, 1.17, 1.46),
    "pvol": (0.87, 0.87, 1.00, 1.15, 1.30, 1.30),
    "acap": (1.42, 1.19, 1.00, 0.85, 0.71, 0.71),
    "pcap": (1.34, 1.15, 1.00, 0.88, 0.76, 0.76),
    "pcon": (1.29, 1.12, 1.00, 0.90, 0.81, 0.81),
    "apex": (1.22, 1.10, 1.00, 0.88, 0.81, 0.81),
    "plex": (1.19, 1.09, 1.00, 0.91, 0.85, 0.85),
    "ltex": (1.20, 1.09, 1.00, 0.91, 0.84, 0.84),
    "tool": (1.17, 1.09, 1.00, 0.90, 0.78, 0.78),
    "site": (1.22, 1.09, 1.00, 0.93, 0.86, 0.80),
    "sced": (1.43, 1.14, 1.00, 1.00, 1.00, 1.00),
}

# defect-introduction multipliers per attribute (nominal = 1.0); quality
# pressure (rely, docu, pmat, capable staff) lowers introduced defects,
# complexity and schedule pressure raise them
DEFECT_MULTIPLIERS = {
    "rely": (1.35, 1.15, 1.00, 0.88, 0.75, 0.75),
    "cplx": (0.80, 0.90, 1.00, 1.15, 1.30, 1.50),
    "docu": (1.25, 1.10, 1.00, 0.92, 0.85, 0.85),
    "acap": (1.40, 1.17, 1.00, 0.87, 0.74, 0.74),
    "pcap": (1.35, 1.15, 1.00, 0.88, 0.77, 0.77),
    "apex": (1.25, 1.11, 1.00, 0.90, 0.81, 0.81),
    "pmat": (1.30, 1.13, 1.00, 0.89, 0.79, 0.70),
    "time": (1.00, 1.00, 1.00, 1.08, 1.17, 1.30),
    "sced": (1.30, 1.12, 1.00, 1.00, 1.00, 1.00),
}

DEFECTS_PER_KSLOC = 60.0

ORDINALS = sorted(set(SCALE_FACTORS) | set(EFFORT_MULTIPLIERS))


def _rate(table, attrs, name):
    rating = int(round(attrs.get(name, 3)))
    rating = min(max(rating, 1), len(table[name]))
    return table[name][rating - 1]


def load_risk_rules(path=None):
    """Risk rule table: each rule is a list of (attribute, op, threshold)
    antecedents that all must hold for the rule to trigger."""
    if path is None:
        text = resources.files("swaylab.models").joinpath(
            "xomo_risk_rules.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    rules = json.loads(text)
    for rule in rules:
        for attr, op, _ in rule["conditions"]:
            if attr not in ORDINALS:
                raise ValueError(f"risk rule on unknown attribute {attr!r}")
            if op not in ("<=", ">="):
                raise ValueError(f"risk rule op must be <= or >=, got {op!r}")
    return rules


def _rule_triggered(rule, attrs):
    for attr, op, threshold in rule["conditions"]:
        value = attrs.get(attr, 3)
        ok = value <= threshold if op == "<=" else value >= threshold
        if not ok:
            return False
    return True


class XomoScenario:
    """Ranged attributes (tuned by the optimizer) plus fixed settings."""

    def __init__(self, name, ranges, fixed, risk_rules=None):
        self.name = name
        self.ranges = dict(ranges)   # attr -> (low, high); includes ksloc
        self.fixed = dict(fixed)
        self.risk_rules = risk_rules if risk_rules is not None \
            else load_risk_rules()
        overlap = set(self.ranges) & set(self.fixed)
        if overlap:
            raise ValueError(f"attributes both ranged and fixed: {overlap}")

    def schema(self):
        dims = []
        for attr, (low, high) in self.ranges.items():
            kind = "continuous" if attr == "ksloc" else "integer"
            dims.append(Dim(attr, kind, low, high))
        return DecisionSchema(dims)

    def attributes(self, decisions):
        attrs = dict(self.fixed)
        for (attr, _), value in zip(self.ranges.items(), decisions):
            attrs[attr] = value
        return attrs


def xomo_evaluate(scenario, decisions):
    """(risk, effort, defects, months), all minimized."""
    attrs = scenario.attributes(decisions)
    ksloc = float(attrs["ksloc"])

    exponent = EFFORT_B + 0.01 * sum(
        _rate(SCALE_FACTORS, attrs, sf) for sf in SCALE_FACTORS)
    em = 1.0
    for name in EFFORT_MULTIPLIERS:
        em *= _rate(EFFORT_MULTIPLIERS, attrs, name)
    effort = EFFORT_A * ksloc ** exponent * em

    months = SCHED_C * effort ** (SCHED_D + 0.2 * (exponent - EFFORT_B))

    dm = 1.0
    for name in DEFECT_MULTIPLIERS:
        dm *= _rate(DEFECT_MULTIPLIERS, attrs, name)
    defects = DEFECTS_PER_KSLOC * ksloc * dm

    triggered = sum(1 for rule in scenario.risk_rules
                    if _rule_triggered(rule, attrs))
    risk = triggered / len(scenario.risk_rules)
    return risk, effort, defects, months


def _scenario(name, ranges, fixed):
    return XomoScenario(name, ranges, fixed)


SCENARIOS = {
    "xomo-flight": _scenario(
        "xomo-flight",
        {"rely": (3, 5), "data": (2, 3), "cplx": (3, 6), "time": (3, 4),
         "stor": (3, 4), "acap": (3, 5), "apex": (2, 5), "pcap": (3, 5),
         "plex": (1, 4), "ltex": (1, 4), "pmat": (2, 3),
         "ksloc": (7, 418)},
        {"tool": 2, "sced": 3}),
    "xomo-ground": _scenario(
        "xomo-ground",
        {"rely": (1, 4), "data": (2, 3), "cplx": (1, 4), "time": (3, 4),
         "stor": (3, 4), "acap": (3, 5), "apex": (2, 5), "pcap": (3, 5),
         "plex": (1, 4), "ltex": (1, 4), "pmat": (2, 3),
         "ksloc": (11, 392)},
        {"tool": 2, "sced": 3}),
    "xomo-osp": _scenario(
        "xomo-osp",
        {"prec": (1, 2), "flex": (2, 5), "resl": (1, 3), "team": (2, 3),
         "pmat": (1, 4), "stor": (3, 5), "ruse": (2, 4), "docu": (2, 4),
         "acap": (2, 3), "pcon": (2, 3), "apex": (2, 3), "ltex": (2, 4),
         "tool": (2, 3), "sced": (1, 3), "cplx": (5, 6),
         "ksloc": (75, 125)},
        {"data": 3, "pvol": 2, "rely": 5, "pcap": 3, "plex": 3, "site": 3}),
    "xomo-osp2": _scenario(
        "xomo-osp2",
        {"prec": (3, 5), "pmat": (4, 5), "docu": (3, 4), "ltex": (2, 5),
         "sced": (2, 4), "ksloc": (75, 125)},
        {"flex": 3, "resl": 4, "team": 3, "time": 3, "stor": 3, "data": 4,
         "pvol": 3, "ruse": 4, "rely": 5, "acap": 4, "pcap": 3, "pcon": 3,
         "apex": 4, "plex": 4, "tool": 5, "cplx": 4, "site": 6}),
}


def xomo_problem(name, budget=None):
    scenario = SCENARIOS[name.lower()]
    return ProblemSpec(
        scenario.name, scenario.schema(),
        [MINIMIZE, MINIMIZE, MINIMIZE, MINIMIZE],
        lambda d: xomo_evaluate(scenario, d), budget=budget)
