"""Ranking machinery: A12 effect size, bootstrap significance, Scott-Knott.

Two treatments land in different ranks only when their samples are both
significantly different (non-parametric bootstrap on the median difference,
95% confidence by default) and more than a small effect apart (Vargha-
Delaney A12 >= 0.6 in the favorable direction).
"""

import random
import statistics

SMALL_EFFECT = 0.6
CLOSE_TO_TOP = 0.05  # median within 5% of the top rank counts as "close"


class Treatment:
    def __init__(self, name, samples):
        self.name = name
        self.samples = [float(s) for s in samples]

    @property
    def median(self):
        return statistics.median(self.samples)

    @property
    def iqr(self):
        qs = statistics.quantiles(self.samples, n=4,
                                  method="inclusive") if \
            len(self.samples) > 1 else [self.samples[0]] * 3
        return qs[2] - qs[0]


class RankedTreatment:
    def __init__(self, rank, treatment, close_to_top=False):
        self.rank = rank
        self.treatment = treatment
        self.close_to_top = close_to_top

    @property
    def name(self):
        return self.treatment.name

    @property
    def median(self):
        return self.treatment.median

    @property
    def iqr(self):
        return self.treatment.iqr


def a12(x, y):
    """Probability (with half credit for ties) that a value from x exceeds
    one from y; a12(x, y) + a12(y, x) == 1."""
    if not x or not y:
        raise ValueError("a12 needs non-empty samples")
    more = sum(1 for a in x for b in y if a > b)
    ties = sum(1 for a in x for b in y if a == b)
    return (more + 0.5 * ties) / (len(x) * len(y))


def bootstrap_different(x, y, confidence=0.95, resamples=1000, seed=0):
    """Pooled-null bootstrap on |median(x) - median(y)|.

    True iff the observed gap exceeds the ``confidence`` quantile of gaps
    between resamples drawn from the pooled data.  Deterministic per seed.
    """
    if len(x) < 2 or len(y) < 2:
        raise ValueError("bootstrap needs >= 2 samples per side")
    observed = abs(statistics.median(x) - statistics.median(y))
    if observed == 0:
        return False
    rng = random.Random(seed)
    pooled = list(x) + list(y)
    exceed = 0
    for _ in range(resamples):
        bx = rng.choices(pooled, k=len(x))
        by = rng.choices(pooled, k=len(y))
        if abs(statistics.median(bx) - statistics.median(by)) >= observed:
            exceed += 1
    return exceed / resamples <= 1.0 - confidence


def _distinct(left, right, direction, confidence, resamples, seed):
    """Both gates: significance and non-small effect, direction-aware."""
    lx = [s for t in left for s in t.samples]
    rx = [s for t in right for s in t.samples]
    # left always holds the better medians; the effect-size gate asks
    # whether the worse side really tends to produce worse values
    worse, better = (rx, lx) if direction == "lower-better" else (lx, rx)
    if a12(worse, better) < SMALL_EFFECT:
        return False
    return bootstrap_different(lx, rx, confidence, resamples, seed)


def scott_knott(treatments, direction="lower-better", confidence=0.95,
                resamples=1000, seed=0):
    """Recursively group treatments into statistically distinct ranks.

    Treatments are sorted best-median-first and split where the between-
    group sum of squares of medians peaks; a split stands only if the two
    groups pass both gates.  Returns RankedTreatment rows, rank 1 best,
    with "reasonably close to the top" markers.
    """
    if direction not in ("lower-better", "higher-better"):
        raise ValueError(f"bad direction {direction!r}")
    if not treatments:
        raise ValueError("need at least one treatment")
    items = sorted(treatments, key=lambda t: t.median,
                   reverse=(direction == "higher-better"))

    def split(group):
        if len(group) < 2:
            return [group]
        best_gain, best_at = -1.0, None
        medians = [t.median for t in group]
        overall = sum(medians) / len(medians)
        for i in range(1, len(group)):
            lm = medians[:i]
            rm = medians[i:]
            gain = (len(lm) * (sum(lm) / len(lm) - overall) ** 2 +
                    len(rm) * (sum(rm) / len(rm) - overall) ** 2)
            if gain > best_gain:
                best_gain, best_at = gain, i
        left, right = group[:best_at], group[best_at:]
        if _distinct(left, right, direction, confidence, resamples, seed):
            return split(left) + split(right)
        return [group]

    ranked = []
    top_median = items[0].median
    tol = CLOSE_TO_TOP * abs(top_median) if top_median != 0 else 0.0
    for rank, group in enumerate(split(items), start=1):
        for t in group:
            close = abs(t.median - top_median) <= tol
            ranked.append(RankedTreatment(rank, t, close_to_top=close))
    return ranked
