"""Core problem abstraction: evaluation accounting and domination."""

import random

import pytest

from swaylab.core import (BoundsError, BudgetExhausted, Candidate,
                          DecisionSchema, Dim, EvaluationBudget, MAXIMIZE,
                          MINIMIZE, ProblemSpec, constrained_dominates,
                          dominates, evaluate, nondominated,
                          random_population)


def toy_problem(budget=None, violation_fn=None):
    schema = DecisionSchema([Dim("x", "continuous", 0, 1),
                             Dim("y", "continuous", 0, 1)])
    return ProblemSpec("toy", schema, [MINIMIZE, MINIMIZE],
                       lambda d: (d[0], d[1]), violation_fn, budget=budget)


def test_evaluate_caches_and_counts_once():
    problem = toy_problem()
    c = Candidate((0.5, 0.5))
    first = evaluate(problem, c)
    second = evaluate(problem, c)
    assert first == second == (0.5, 0.5)
    assert problem.evals == 1


def test_counter_counts_distinct_candidates():
    problem = toy_problem()
    for c in random_population(problem, 100, seed=3):
        evaluate(problem, c)
    assert problem.evals == 100


def test_evaluate_negates_maximize_objectives():
    schema = DecisionSchema([Dim("x", "continuous", 0, 1)])
    problem = ProblemSpec("m", schema, [MAXIMIZE], lambda d: (d[0],))
    c = Candidate((0.25,))
    assert evaluate(problem, c) == (-0.25,)
    assert problem.raw_objectives(c) == (0.25,)


def test_evaluate_out_of_bounds():
    problem = toy_problem()
    with pytest.raises(BoundsError):
        evaluate(problem, Candidate((2.0, 0.0)))
    assert problem.evals == 0


def test_budget_exhaustion():
    problem = toy_problem(budget=EvaluationBudget(2))
    evaluate(problem, Candidate((0.1, 0.1)))
    evaluate(problem, Candidate((0.2, 0.2)))
    with pytest.raises(BudgetExhausted):
        evaluate(problem, Candidate((0.3, 0.3)))
    assert problem.evals == 2


def test_random_population_deterministic():
    schema = DecisionSchema([Dim("x", "continuous", 0, 1)])
    problem = ProblemSpec("p", schema, [MINIMIZE], lambda d: (d[0],))
    a = random_population(problem, 5, seed=7)
    b = random_population(problem, 5, seed=7)
    assert [c.decisions for c in a] == [c.decisions for c in b]
    assert problem.evals == 0


def test_random_population_sizes_and_bounds():
    schema = DecisionSchema([Dim("x", "continuous", -3, 5),
                             Dim("k", "integer", 2, 9)])
    problem = ProblemSpec("p", schema, [MINIMIZE], lambda d: (d[0],))
    for n in (100, 10_000):
        pop = random_population(problem, n, seed=1)
        assert len(pop) == n
    seen = set()
    for c in random_population(problem, 500, seed=2):
        assert -3 <= c.decisions[0] < 5
        assert 2 <= c.decisions[1] <= 9
        assert c.decisions[1] == round(c.decisions[1])
        seen.add(c.decisions[1])
    assert seen == set(float(v) for v in range(2, 10))  # both ends reachable


def test_random_population_rejects_bad_n():
    with pytest.raises(ValueError):
        random_population(toy_problem(), 0, seed=0)


def test_dominates_examples():
    assert dominates((1, 1), (2, 2))
    assert not dominates((1, 1), (1, 1))  # irreflexive
    assert not dominates((1, 3), (2, 2))
    assert not dominates((2, 2), (1, 3))  # incomparable both ways
    with pytest.raises(ValueError):
        dominates((1,), (1, 2))


def test_dominates_with_senses():
    senses = [MAXIMIZE, MINIMIZE]
    assert dominates((5, 1), (4, 2), senses)
    assert not dominates((4, 1), (5, 2), senses)


def test_domination_strict_partial_order():
    rng = random.Random(42)
    for _ in range(200):
        k = rng.randint(2, 4)
        vecs = [tuple(rng.randint(0, 4) for _ in range(k)) for _ in range(6)]
        for a in vecs:
            assert not dominates(a, a)
            for b in vecs:
                assert not (dominates(a, b) and dominates(b, a))
                for c in vecs:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)


def _cand(objectives, violation=0.0):
    c = Candidate((0.0,))
    c.objectives = tuple(objectives)
    c.violation = violation
    return c


def test_constrained_dominates():
    assert constrained_dominates(_cand((9, 9), 0.0), _cand((1, 1), 3.0))
    assert constrained_dominates(_cand((9, 9), 2.0), _cand((1, 1), 5.0))
    assert not constrained_dominates(_cand((1, 1), 5.0), _cand((9, 9), 2.0))
    # both feasible: defers to plain domination
    assert constrained_dominates(_cand((1, 1)), _cand((2, 2)))
    assert not constrained_dominates(_cand((1, 3)), _cand((2, 2)))


def test_nondominated_subset():
    pop = [_cand((1, 2)), _cand((2, 1)), _cand((2, 2)), _cand((0, 0), 1.0)]
    front = nondominated(pop)
    assert front == pop[:2]


def test_schema_validation():
    with pytest.raises(ValueError):
        Dim("x", "continuous", 3, 1)
    with pytest.raises(ValueError):
        Dim("x", "integer", 0.5, 2)
    with pytest.raises(ValueError):
        DecisionSchema([])
