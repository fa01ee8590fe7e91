# File: metrics/distance.py

"""
TsadLab/metrics/distance.py

Temporal distance and average alert delay. Both are lower-is-better raw
quantities; the catalog exposes them negated so every score is higher-is-better.
"""

from fractions import Fraction

import numpy as np

from core.sequence import checkSameLength
from metrics.descriptor import ratio, isUndefined
from metrics.overlap import firstHits

# Spacer for readability
# ------------------------------------------------------------------------------

def closestDistanceSum(a, b):
    """
    Sum over the ones of a of the distance to the nearest one of b.

    Returns:
        int | float: inf when a has ones and b has none, 0 when a has none.
    """
    source = np.flatnonzero(a.array)
    target = np.flatnonzero(b.array)
    if source.size == 0:
        return 0
    if target.size == 0:
        return float('inf')
    right = np.clip(np.searchsorted(target, source), 0, target.size - 1)
    left = np.clip(right - 1, 0, target.size - 1)
    nearest = np.minimum(np.abs(target[right] - source), np.abs(target[left] - source))
    return int(nearest.sum())

def temporalDistance(g, p):
    checkSameLength(g, p)
    return closestDistanceSum(g, p) + closestDistanceSum(p, g)

def averageAlertDelay(g, p):
    """
    Mean delay between a window start and its first hit; undefined without hits.
    """
    checkSameLength(g, p)
    hits = firstHits(g, p)
    return ratio(sum(first - window.lo for window, first in hits), len(hits))

# Spacer for readability
# ------------------------------------------------------------------------------

def negatedTemporalDistance(g, p):
    distance = temporalDistance(g, p)
    return -distance if isinstance(distance, float) else Fraction(-distance)

def negatedAverageAlertDelay(g, p):
    delay = averageAlertDelay(g, p)
    return delay if isUndefined(delay) else -delay

def scoreTemporalDistance(g, p):
    """
    Scores -TD; -inf when exactly one of the sequences has no ones.
    """
    from metrics.catalog import scoreMetric
    return scoreMetric('temporal-distance', g, p)

def scoreAverageAlertDelay(g, p):
    from metrics.catalog import scoreMetric
    return scoreMetric('average-alert-delay', g, p)
