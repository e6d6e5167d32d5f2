"""The SWAY optimizer: recursive bi-clustering cull of a large random sample.

A large unevaluated population is split in decision space; only the two
split pivots are evaluated, and the half owned by a dominated pivot is
discarded.  Recursion stops once a cluster shrinks below a cutoff
(sqrt of the initial population size, fixed at the root).

Two split strategies are provided: a FASTMAP-style projection split for
continuous/integer decision spaces, and a release-workload pre-grouping for
next-release-problem vectors that buckets candidates before projecting.

Distances are Euclidean on bounds-normalized decisions; the whole
population is normalized once into a matrix and the recursion works on
index arrays, so splitting 10^4 candidates costs milliseconds.
"""

import math
import random

import numpy as np

from .core import constrained_dominates, evaluate

WEST_WINS = "west-wins"
EAST_WINS = "east-wins"
TIE = "tie"


class DegenerateSplit(Exception):
    """All candidates coincide in decision space; nothing to separate."""


class SplitResult:
    __slots__ = ("west", "east", "west_items", "east_items")

    def __init__(self, west, east, west_items, east_items):
        self.west = west
        self.east = east
        self.west_items = west_items
        self.east_items = east_items


class SwayConfig:
    def __init__(self, seed=0, epsilon_rule=None, split="continuous",
                 releases=None):
        self.seed = seed
        self.epsilon_rule = epsilon_rule or (lambda n: max(1.0, math.sqrt(n)))
        if split not in ("continuous", "monrp"):
            raise ValueError(f"unknown split strategy {split!r}")
        self.split = split
        self.releases = releases  # max release index, required for monrp split


def normalized_matrix(candidates, schema):
    x = np.array([c.decisions for c in candidates], dtype=float)
    low = np.array([d.low for d in schema])
    span = np.array([d.high - d.low for d in schema])
    span[span == 0] = 1.0
    return (x - low) / span


def _fastmap_partition(x, idx, rng):
    """Pivot indices and the two index halves for the rows ``idx`` of x.

    Pivots: a random row, its furthest row E, then E's furthest row W
    (argmax breaks ties at the lowest position, keeping runs deterministic).
    Every row is projected onto the W->E line and cut at the midpoint.
    """
    rows = x[idx]
    start = rows[rng.randrange(len(idx))]
    e = int(np.argmax(np.linalg.norm(rows - start, axis=1)))
    dists = np.linalg.norm(rows - rows[e], axis=1)
    w = int(np.argmax(dists))
    diameter = float(dists[w])
    if diameter == 0.0:
        raise DegenerateSplit
    we = rows[e] - rows[w]
    xd = (rows - rows[w]) @ we / diameter
    west_mask = xd < diameter / 2.0
    # W projects to 0 and E to the diameter, so neither side can be empty
    return idx[w], idx[e], idx[west_mask], idx[~west_mask]


def split_continuous(candidates, schema, rng):
    """FASTMAP split of a candidate list; raises DegenerateSplit when all
    candidates sit at the same decision point."""
    if len(candidates) < 2:
        raise ValueError("need at least 2 candidates to split")
    x = normalized_matrix(candidates, schema)
    idx = np.arange(len(candidates))
    wi, ei, west_idx, east_idx = _fastmap_partition(x, idx, rng)
    return SplitResult(candidates[wi], candidates[ei],
                       [candidates[i] for i in west_idx],
                       [candidates[i] for i in east_idx])


def workload(decisions, releases):
    """How many requirements a plan releases in the first half of releases.

    Aborted requirements (value 0) do not count as released.
    """
    cut = math.ceil(releases / 2)
    return sum(1 for y in decisions if 0 < y <= cut)


def _workload_bands(candidates, releases):
    """Index arrays for quantile bands of the workload value,
    ceil(sqrt(#distinct workloads)) bands, each a comparable slice."""
    cut = math.ceil(releases / 2)
    y = np.array([c.decisions for c in candidates], dtype=float)
    wl = ((y > 0) & (y <= cut)).sum(axis=1)
    n_bands = max(1, math.ceil(math.sqrt(len(np.unique(wl)))))
    order = np.argsort(wl, kind="stable")
    return np.array_split(order, n_bands)


def split_discrete_monrp(candidates, schema, releases, rng):
    """Bucket by release workload, then FASTMAP-split within each bucket.

    Returns (splits, leaves): one SplitResult per splittable bucket, plus
    the candidates from buckets too small or too degenerate to split.
    """
    splits, leaves = [], []
    for band in _workload_bands(candidates, releases):
        bucket = [candidates[i] for i in band]
        if len(bucket) < 2:
            leaves.extend(bucket)
            continue
        try:
            splits.append(split_continuous(bucket, schema, rng))
        except DegenerateSplit:
            leaves.extend(bucket)
    return splits, leaves


def compare_representatives(west, east, problem):
    """Evaluate both pivots (cached) and report which side survives."""
    evaluate(problem, west)
    evaluate(problem, east)
    if constrained_dominates(west, east):
        return WEST_WINS
    if constrained_dominates(east, west):
        return EAST_WINS
    return TIE


def sway(problem, candidates, config):
    """Cull ``candidates`` down to a promising cluster, evaluating few.

    Survivors are always a subset of the input; candidates are never
    modified or recombined.  Deterministic for a fixed config seed.
    """
    if not candidates:
        raise ValueError("candidates must be non-empty")
    rng = random.Random(config.seed)
    cutoff = config.epsilon_rule(len(candidates))
    x = normalized_matrix(candidates, problem.schema)

    def recurse(idx):
        if len(idx) < cutoff:
            return list(idx)
        try:
            wi, ei, west_idx, east_idx = _fastmap_partition(x, idx, rng)
        except DegenerateSplit:
            return list(idx)
        outcome = compare_representatives(
            candidates[wi], candidates[ei], problem)
        if outcome == WEST_WINS:
            return recurse(west_idx)
        if outcome == EAST_WINS:
            return recurse(east_idx)
        return recurse(west_idx) + recurse(east_idx)

    if config.split == "monrp":
        if config.releases is None:
            raise ValueError("monrp split needs config.releases")
        if len(candidates) < cutoff:
            return list(candidates)
        # pre-group once by domain knowledge, then recurse per bucket
        survivor_idx = []
        for band in _workload_bands(candidates, config.releases):
            survivor_idx += recurse(band)
    else:
        survivor_idx = recurse(np.arange(len(candidates)))
    return [candidates[i] for i in sorted(survivor_idx)]
