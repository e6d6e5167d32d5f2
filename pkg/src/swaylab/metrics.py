"""Quality indicators over final fronts: Deb spread and exact hypervolume.

Fronts from all treatments of one scenario are normalized together into
[0,1]^k (minimization form) so indicator values are comparable; the shared
bounds are the per-objective min/max over the union of fronts.
"""

import math

import numpy as np

HV_REFERENCE_OFFSET = 0.1  # reference point = 1.1 per normalized objective


class UndefinedIndicator(ValueError):
    """The indicator is not defined for this front (e.g. fewer than 2 points)."""


class NormalizedFront:
    def __init__(self, points, lows, highs):
        self.points = np.asarray(points, dtype=float)
        self.lows = np.asarray(lows, dtype=float)
        self.highs = np.asarray(highs, dtype=float)


def normalize_fronts(fronts):
    """Normalize minimization-form fronts with shared per-objective bounds.

    Degenerate objectives (max == min over the union) map to 0.
    """
    fronts = [np.asarray(f, dtype=float) for f in fronts]
    if not fronts or any(f.size == 0 for f in fronts):
        raise ValueError("need at least one non-empty front")
    union = np.vstack(fronts)
    lows = union.min(axis=0)
    highs = union.max(axis=0)
    span = highs - lows
    safe = np.where(span == 0, 1.0, span)
    out = []
    for f in fronts:
        pts = (f - lows) / safe
        pts[:, span == 0] = 0.0
        out.append(NormalizedFront(pts, lows, highs))
    return out


def _projection_order(points):
    """Order points along the line joining the two most distant points,
    the same first-principal-component reading used to split candidates."""
    n = len(points)
    diff = points[:, None, :] - points[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=2))
    i, j = np.unravel_index(np.argmax(d), d.shape)
    axis = points[j] - points[i]
    norm = np.linalg.norm(axis)
    if norm == 0:
        return np.arange(n)
    proj = (points - points[i]) @ axis / norm
    return np.argsort(proj, kind="stable")


def spread(front):
    """Deb's spread: (d_f + d_l + sum|d_i - mean|) / (d_f + d_l + (n-1)*mean).

    ``front`` is a NormalizedFront or an array of normalized points.  The
    front is walked in projection order; the boundary terms d_f/d_l are the
    distances from the walk's endpoints to the nearest per-objective
    extreme point of the normalization bounds.  Lower is better; perfectly
    uniform spacing with touching extremes gives the minimum.
    """
    pts = front.points if isinstance(front, NormalizedFront) else \
        np.asarray(front, dtype=float)
    if len(pts) < 2:
        raise UndefinedIndicator("spread needs at least 2 points")
    order = _projection_order(pts)
    walk = pts[order]
    gaps = np.sqrt(((walk[1:] - walk[:-1]) ** 2).sum(axis=1))
    mean = gaps.mean()
    k = pts.shape[1]
    extremes = []
    for m in range(k):
        e = np.zeros(k)
        e[m] = 1.0
        extremes.append(e)
    extremes = np.array(extremes)
    d_f = float(np.sqrt(((extremes - walk[0]) ** 2).sum(axis=1)).min())
    d_l = float(np.sqrt(((extremes - walk[-1]) ** 2).sum(axis=1)).min())
    denom = d_f + d_l + (len(pts) - 1) * mean
    if denom == 0:
        return 0.0
    return float((d_f + d_l + np.abs(gaps - mean).sum()) / denom)


def _nondominated_min(points):
    if len(points) < 2:
        return points
    le = (points[:, None, :] <= points[None, :, :]).all(axis=2)
    lt = (points[:, None, :] < points[None, :, :]).any(axis=2)
    dominated = (le & lt).any(axis=0)
    return points[~dominated]


def _hv_2d(points, ref):
    """Staircase area of a 2-D non-dominated minimization set."""
    order = np.lexsort((points[:, 1], points[:, 0]))
    pts = points[order]
    total = 0.0
    prev_y = ref[1]
    for x, y in pts:
        if y >= prev_y:
            continue
        total += (ref[0] - x) * (prev_y - y)
        prev_y = y
    return total


def _hv_recursive(points, ref):
    """Dimension-sweep slicing; exact for the small k used here."""
    k = points.shape[1]
    if len(points) == 0:
        return 0.0
    if k == 1:
        return float(ref[0] - points[:, 0].min())
    if k == 2:
        return _hv_2d(_nondominated_min(points), ref)
    # sweep the last objective; each slice contributes its (k-1)-volume
    # times the slab thickness up to the next distinct level
    levels = np.unique(points[:, -1])
    total = 0.0
    for li, level in enumerate(levels):
        upper = levels[li + 1] if li + 1 < len(levels) else ref[-1]
        if upper <= level:
            continue
        active = points[points[:, -1] <= level][:, :-1]
        area = _hv_recursive(_nondominated_min(active), ref[:-1])
        total += area * (upper - level)
    return total


def hypervolume(front, reference=None):
    """Exact hypervolume dominated by a minimization front w.r.t. reference.

    Default reference: 1.1 in every normalized objective.  Any point beyond
    the reference is a contract error.
    """
    pts = front.points if isinstance(front, NormalizedFront) else \
        np.asarray(front, dtype=float)
    if pts.ndim != 2 or len(pts) == 0:
        raise ValueError("front must be a non-empty 2-D point set")
    k = pts.shape[1]
    ref = np.full(k, 1.0 + HV_REFERENCE_OFFSET) if reference is None \
        else np.asarray(reference, dtype=float)
    if (pts > ref).any():
        raise ValueError("front point lies beyond the reference point")
    return _hv_recursive(_nondominated_min(np.unique(pts, axis=0)), ref)


def evaluation_count(record):
    """Evaluations consumed by a run record (kept with the indicators so
    reports pull all three measures from one module)."""
    return record.eval_count
