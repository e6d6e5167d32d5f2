"""Correlation-dimension estimate of a point cloud's intrinsic dimension.

C(r) is the fraction of point pairs within Euclidean distance r; the
intrinsic dimension is the mean slope of ln C(r) against ln r over
log-spaced radii.  A cloud living on a d-dimensional manifold embedded in
a higher-dimensional space reports roughly d.
"""

import numpy as np
from scipy.spatial.distance import pdist


class UndefinedDimension(ValueError):
    """No radius captured any pair; the slope is undefined."""


def _pairwise_distances(points):
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or len(points) < 2:
        raise ValueError("need at least 2 points")
    return pdist(points)


def correlation_integral(points, r):
    """Fraction of unordered pairs closer than r."""
    if r <= 0:
        raise ValueError("radius must be positive")
    d = _pairwise_distances(points)
    return float((d < r).mean())


RADIUS_PERCENTILES = (0.5, 10.0)


def default_radius_range(points):
    """Low percentiles of the positive pairwise distances.

    The log-log slope only reflects the manifold dimension in the small-r
    scaling regime; larger radii saturate against the cloud's boundary and
    drag the estimate down, so the default window stays well below the
    median distance.
    """
    d = _pairwise_distances(points)
    lo, hi = np.percentile(d[d > 0], RADIUS_PERCENTILES)
    return float(lo), float(hi)


def correlation_curve(points, r0=None, rmax=None, steps=20):
    """(radii, C(r)) over log-spaced radii."""
    if r0 is None or rmax is None:
        lo, hi = default_radius_range(points)
        r0 = lo if r0 is None else r0
        rmax = hi if rmax is None else rmax
    if not 0 < r0 < rmax:
        raise ValueError("need 0 < r0 < rmax")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    radii = np.logspace(np.log10(r0), np.log10(rmax), steps)
    d = _pairwise_distances(points)
    values = np.array([(d < r).mean() for r in radii])
    return radii, values


def intrinsic_dimension(points, r0=None, rmax=None, steps=20):
    """Mean finite-difference slope of ln C(r) vs ln r, skipping radii
    where C(r) is still zero."""
    radii, values = correlation_curve(points, r0, rmax, steps)
    mask = values > 0
    radii, values = radii[mask], values[mask]
    if len(radii) < 2:
        raise UndefinedDimension("correlation integral vanished everywhere")
    slopes = np.diff(np.log(values)) / np.diff(np.log(radii))
    return float(slopes.mean())
