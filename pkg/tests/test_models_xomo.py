"""Cost/defect/risk model: equations, scenario tables, risk rules."""

import json
import random

import pytest

from swaylab.core import evaluate, random_population
from swaylab.models.xomo import (SCENARIOS, XomoScenario, load_risk_rules,
                                 xomo_evaluate, xomo_problem)


def sample_decisions(scenario, rng):
    out = []
    for d in scenario.schema():
        if d.kind == "integer":
            out.append(float(rng.randint(int(d.low), int(d.high))))
        else:
            out.append(rng.uniform(d.low, d.high))
    return out


def test_flight_ksloc_range():
    schema = SCENARIOS["xomo-flight"].schema()
    ksloc = next(d for d in schema if d.name == "ksloc")
    assert (ksloc.low, ksloc.high) == (7, 418)
    assert ksloc.kind == "continuous"


def test_effort_superlinear_in_ksloc():
    # low-maturity ratings push the scale exponent above 1
    scenario = XomoScenario("t", {"ksloc": (1, 1000)},
                            {"prec": 1, "flex": 1, "resl": 1, "team": 1,
                             "pmat": 1})
    _, e1, _, _ = xomo_evaluate(scenario, [100.0])
    _, e2, _, _ = xomo_evaluate(scenario, [200.0])
    assert e2 > 2 * e1


def test_all_rules_unmet_gives_zero_risk():
    rules = [{"name": "never", "conditions": [["rely", ">=", 99]]}]
    scenario = XomoScenario("t", {"ksloc": (1, 10)}, {}, risk_rules=rules)
    risk, _, _, _ = xomo_evaluate(scenario, [5.0])
    assert risk == 0.0


def test_risk_rule_triggering():
    rules = [
        {"name": "fragile", "conditions": [["rely", ">=", 4],
                                           ["acap", "<=", 2]]},
        {"name": "never", "conditions": [["cplx", ">=", 99]]},
    ]
    scenario = XomoScenario("t", {"ksloc": (1, 10)},
                            {"rely": 5, "acap": 2}, risk_rules=rules)
    risk, _, _, _ = xomo_evaluate(scenario, [5.0])
    assert risk == pytest.approx(0.5)  # 1 of 2 rules triggered


def test_objectives_positive_everywhere():
    rng = random.Random(0)
    for name, scenario in SCENARIOS.items():
        for _ in range(50):
            risk, effort, defects, months = xomo_evaluate(
                scenario, sample_decisions(scenario, rng))
            assert 0.0 <= risk <= 1.0
            assert effort > 0 and defects > 0 and months > 0


def test_fixed_attributes_stay_fixed():
    scenario = SCENARIOS["xomo-osp2"]
    d = sample_decisions(scenario, random.Random(1))
    attrs = scenario.attributes(d)
    assert attrs["rely"] == 5
    assert attrs["site"] == 6


def test_ratings_clamped_to_table_edges():
    scenario = XomoScenario("t", {"ksloc": (1, 10)}, {"rely": 6})
    low = XomoScenario("t", {"ksloc": (1, 10)}, {"rely": 5})
    _, e6, _, _ = xomo_evaluate(scenario, [5.0])
    _, e5, _, _ = xomo_evaluate(low, [5.0])
    assert e6 == e5  # rely table has no level-6 entry; clamps to 5


def test_better_staff_means_fewer_defects():
    good = XomoScenario("t", {"ksloc": (1, 10)}, {"acap": 5, "pcap": 5})
    poor = XomoScenario("t", {"ksloc": (1, 10)}, {"acap": 1, "pcap": 1})
    _, _, d_good, _ = xomo_evaluate(good, [5.0])
    _, _, d_poor, _ = xomo_evaluate(poor, [5.0])
    assert d_good < d_poor


def test_load_rules_validation(tmp_path):
    bad_attr = tmp_path / "bad_attr.json"
    bad_attr.write_text(json.dumps(
        [{"name": "x", "conditions": [["nope", ">=", 1]]}]))
    with pytest.raises(ValueError):
        load_risk_rules(bad_attr)
    bad_op = tmp_path / "bad_op.json"
    bad_op.write_text(json.dumps(
        [{"name": "x", "conditions": [["rely", "!=", 1]]}]))
    with pytest.raises(ValueError):
        load_risk_rules(bad_op)


def test_default_rules_load():
    rules = load_risk_rules()
    assert len(rules) >= 10
    assert all(rule["conditions"] for rule in rules)


def test_problem_spec():
    problem = xomo_problem("xomo-ground")
    assert problem.senses == ["min"] * 4
    for c in random_population(problem, 5, seed=0):
        evaluate(problem, c)
    assert problem.evals == 5


def test_ranged_and_fixed_must_not_overlap():
    with pytest.raises(ValueError):
        XomoScenario("t", {"rely": (1, 5), "ksloc": (1, 10)}, {"rely": 3})
