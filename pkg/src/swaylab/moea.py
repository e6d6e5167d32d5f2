"""Baseline evolutionary optimizers: NSGA-II and SPEA2.

Both accept an optional pre-evaluated initial population so SWAY survivors
can seed generation zero.  Budget accounting is exact: generations =
floor((max_evals - pop_size) / pop_size), partial generations are not run,
and cached candidates never re-count.

Pairwise domination and distance work is vectorized with numpy; the public
functions still speak lists of Candidate.
"""

import math
import random

import numpy as np

from .core import Candidate, evaluate, random_population

INF = float("inf")


class MoeaConfig:
    def __init__(self, pop_size=100, max_evals=2000, crossover_prob=0.9,
                 mutation_prob=None, sbx_eta=30.0, pm_eta=20.0, seed=0,
                 initial_pop=None):
        if pop_size < 2:
            raise ValueError("pop_size must be >= 2")
        if max_evals < pop_size:
            raise ValueError("max_evals must cover the initial population")
        self.pop_size = pop_size
        self.max_evals = max_evals
        self.crossover_prob = crossover_prob
        self.mutation_prob = mutation_prob  # defaults to 1/|dims| at run time
        self.sbx_eta = sbx_eta
        self.pm_eta = pm_eta
        self.seed = seed
        self.initial_pop = initial_pop


def domination_matrix(pop):
    """Boolean matrix D[i, j] = candidate i constrained-dominates j.

    Feasible beats infeasible, infeasibles compare by violation, feasibles
    by binary Pareto domination on minimization-form objectives.
    """
    obj = np.array([c.objectives for c in pop], dtype=float)
    vio = np.array([c.violation or 0.0 for c in pop], dtype=float)
    le = (obj[:, None, :] <= obj[None, :, :]).all(axis=2)
    lt = (obj[:, None, :] < obj[None, :, :]).any(axis=2)
    pareto = le & lt
    feas_i = vio == 0.0
    dom = np.where(feas_i[:, None] & feas_i[None, :], pareto, False)
    dom |= feas_i[:, None] & ~feas_i[None, :]
    both_inf = ~feas_i[:, None] & ~feas_i[None, :]
    dom |= both_inf & (vio[:, None] < vio[None, :])
    np.fill_diagonal(dom, False)
    return dom


def fast_nondominated_sort(pop):
    """Partition an evaluated population into domination bands, best first."""
    for c in pop:
        if not c.evaluated:
            raise ValueError("fast_nondominated_sort needs evaluated candidates")
    dom = domination_matrix(pop)
    counts = dom.sum(axis=0).astype(int)
    bands = []
    remaining = np.ones(len(pop), dtype=bool)
    while remaining.any():
        band = np.flatnonzero(remaining & (counts == 0))
        bands.append([pop[i] for i in band])
        remaining[band] = False
        counts -= dom[band].sum(axis=0)
    return bands


def crowding_distance(band):
    """Crowding distance per candidate; boundary points get infinity."""
    n = len(band)
    if n == 0:
        raise ValueError("band must be non-empty")
    obj = np.array([c.objectives for c in band], dtype=float)
    dist = np.zeros(n)
    for m in range(obj.shape[1]):
        order = np.argsort(obj[:, m], kind="stable")
        lo, hi = obj[order[0], m], obj[order[-1], m]
        dist[order[0]] = dist[order[-1]] = INF
        if hi == lo:
            continue
        gaps = (obj[order[2:], m] - obj[order[:-2], m]) / (hi - lo)
        dist[order[1:-1]] += gaps
    return dist.tolist()


def variation(parents, schema, config, rng):
    """Produce two offspring: SBX + polynomial mutation on continuous dims,
    uniform crossover + random reset on integer dims.  Always in bounds."""
    p1, p2 = parents
    c1 = list(p1.decisions)
    c2 = list(p2.decisions)
    pm = config.mutation_prob
    if pm is None:
        pm = 1.0 / len(schema)
    if rng.random() < config.crossover_prob:
        for i, d in enumerate(schema):
            if d.kind == "integer":
                if rng.random() < 0.5:
                    c1[i], c2[i] = c2[i], c1[i]
            else:
                c1[i], c2[i] = _sbx(c1[i], c2[i], d, config.sbx_eta, rng)
    for child in (c1, c2):
        for i, d in enumerate(schema):
            if rng.random() >= pm:
                continue
            if d.kind == "integer":
                child[i] = d.sample(rng)
            else:
                child[i] = _poly_mutate(child[i], d, config.pm_eta, rng)
    return Candidate([d.clip(x) for x, d in zip(c1, schema)]), \
        Candidate([d.clip(x) for x, d in zip(c2, schema)])


def _sbx(x1, x2, dim, eta, rng):
    if abs(x1 - x2) < 1e-14:
        return x1, x2
    u = rng.random()
    if u <= 0.5:
        beta = (2.0 * u) ** (1.0 / (eta + 1.0))
    else:
        beta = (1.0 / (2.0 * (1.0 - u))) ** (1.0 / (eta + 1.0))
    y1 = 0.5 * ((1 + beta) * x1 + (1 - beta) * x2)
    y2 = 0.5 * ((1 - beta) * x1 + (1 + beta) * x2)
    return dim.clip(y1), dim.clip(y2)


def _poly_mutate(x, dim, eta, rng):
    span = dim.high - dim.low
    if span == 0:
        return x
    u = rng.random()
    if u < 0.5:
        delta = (2.0 * u) ** (1.0 / (eta + 1.0)) - 1.0
    else:
        delta = 1.0 - (2.0 * (1.0 - u)) ** (1.0 / (eta + 1.0))
    return dim.clip(x + delta * span)


def _initial_population(problem, config):
    pop = list(config.initial_pop or [])
    pop = pop[:config.pop_size]
    if len(pop) < config.pop_size:
        pop += random_population(problem, config.pop_size - len(pop),
                                 config.seed)
    for c in pop:
        evaluate(problem, c)
    return pop


def _generations(config):
    return (config.max_evals - config.pop_size) // config.pop_size


def nsga2(problem, config):
    """NSGA-II; returns the best band of the final population."""
    rng = random.Random(config.seed)
    pop = _initial_population(problem, config)
    for _ in range(_generations(config)):
        offspring = _make_offspring(pop, problem, config, rng)
        for c in offspring:
            evaluate(problem, c)
        pop = _nsga2_select(pop + offspring, config.pop_size)
    return fast_nondominated_sort(pop)[0]


def _nsga2_select(merged, size):
    chosen = []
    for band in fast_nondominated_sort(merged):
        if len(chosen) + len(band) <= size:
            chosen += band
        else:
            dist = crowding_distance(band)
            order = sorted(range(len(band)), key=lambda i: -dist[i])
            chosen += [band[i] for i in order[:size - len(chosen)]]
            break
    return chosen


def _make_offspring(pop, problem, config, rng):
    ranks, crowd = _rank_and_crowd(pop)
    offspring = []
    while len(offspring) < config.pop_size:
        p1 = _tournament(pop, ranks, crowd, rng)
        p2 = _tournament(pop, ranks, crowd, rng)
        offspring.extend(variation((p1, p2), problem.schema, config, rng))
    return offspring[:config.pop_size]


def _rank_and_crowd(pop):
    ranks, crowd = {}, {}
    for r, band in enumerate(fast_nondominated_sort(pop)):
        dist = crowding_distance(band)
        for c, d in zip(band, dist):
            ranks[id(c)] = r
            crowd[id(c)] = d
    return ranks, crowd


def _tournament(pop, ranks, crowd, rng):
    a, b = rng.choice(pop), rng.choice(pop)
    ka, kb = (ranks[id(a)], -crowd[id(a)]), (ranks[id(b)], -crowd[id(b)])
    return a if ka <= kb else b


def spea2(problem, config):
    """SPEA2 with strength-based fitness and nearest-neighbour truncation."""
    rng = random.Random(config.seed)
    pop = _initial_population(problem, config)
    archive = _environmental_selection(pop, config.pop_size)
    for _ in range(_generations(config)):
        fitness = _spea2_fitness(archive)
        offspring = []
        while len(offspring) < config.pop_size:
            p1 = _spea2_tournament(archive, fitness, rng)
            p2 = _spea2_tournament(archive, fitness, rng)
            offspring.extend(variation((p1, p2), problem.schema, config, rng))
        offspring = offspring[:config.pop_size]
        for c in offspring:
            evaluate(problem, c)
        archive = _environmental_selection(archive + offspring,
                                           config.pop_size)
    return fast_nondominated_sort(archive)[0]


def _objective_distances(pop):
    obj = np.array([c.objectives for c in pop], dtype=float)
    diff = obj[:, None, :] - obj[None, :, :]
    return np.sqrt((diff * diff).sum(axis=2))


def _spea2_fitness(pop):
    """Raw strength fitness plus k-th nearest neighbour density term."""
    n = len(pop)
    dom = domination_matrix(pop)
    strength = dom.sum(axis=1)
    raw = (strength[:, None] * dom).sum(axis=0)
    dists = _objective_distances(pop)
    np.fill_diagonal(dists, INF)
    dists.sort(axis=1)
    k = min(max(1, int(math.sqrt(n))), n - 1) if n > 1 else 1
    sigma = dists[:, k - 1] if n > 1 else np.zeros(n)
    fit = raw + 1.0 / (sigma + 2.0)
    return {id(c): f for c, f in zip(pop, fit)}


def _spea2_tournament(pop, fitness, rng):
    a, b = rng.choice(pop), rng.choice(pop)
    return a if fitness[id(a)] <= fitness[id(b)] else b


def _environmental_selection(pop, size):
    """Keep non-dominated candidates; truncate by iteratively dropping the
    most crowded point (smallest neighbour distances), so extremes survive."""
    fitness = _spea2_fitness(pop)
    archive = [c for c in pop if fitness[id(c)] < 1.0]
    if len(archive) < size:
        rest = sorted((c for c in pop if fitness[id(c)] >= 1.0),
                      key=lambda c: fitness[id(c)])
        archive += rest[:size - len(archive)]
        return archive
    if len(archive) == size:
        return archive
    dists = _objective_distances(archive)
    np.fill_diagonal(dists, INF)
    alive = list(range(len(archive)))
    while len(alive) > size:
        sub = dists[np.ix_(alive, alive)]
        sub.sort(axis=1)
        rows = [tuple(sub[i]) for i in range(len(alive))]
        drop = min(range(len(alive)), key=lambda i: rows[i])
        del alive[drop]
    return [archive[i] for i in alive]
