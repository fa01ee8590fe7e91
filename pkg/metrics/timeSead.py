# File: metrics/timeSead.py

"""
TsadLab/metrics/timeSead.py

Time-series precision, recall and F1 in the TimeSeAD formulation: precision
weights each alarm by its length and penalises fragmentation through a
recursive cardinality factor, recall averages over anomaly windows with 1/k.
"""

from fractions import Fraction
from functools import lru_cache

from core.sequence import checkSameLength
from metrics.descriptor import ratio, harmonicMean
from metrics.overlap import overlappingRuns
from metrics.rangeBased import biasedOverlap, frontBiasTotal

# Spacer for readability
# ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def recursiveCardinality(count, weightTotal):
    """
    gamma(1) = 1, gamma(n) = max over 0 < m < n of (S - n + m) / S * gamma(m).

    Args:
        count (int): Number of overlapping windows n >= 1.
        weightTotal (int): S, the total positional weight of the window.

    Returns:
        Fraction: gamma(n), equal to (1 - 1/S)^(n-1).
    """
    if count <= 1:
        return Fraction(1)
    return max(
        Fraction(weightTotal - count + m, weightTotal) * recursiveCardinality(m, weightTotal)
        for m in range(1, count)
    )

# Spacer for readability
# ------------------------------------------------------------------------------

def timeSeriesPrecision(g, p):
    checkSameLength(g, p)
    total = Fraction(0)
    for window in p.onesRuns:
        k = len(overlappingRuns(window, g.onesRuns))
        gamma = recursiveCardinality(max(k, 1), frontBiasTotal(window))
        total += window.length * gamma * biasedOverlap(window, g.onesRuns)
    return ratio(total, p.onesCount)

def timeSeriesRecall(g, p):
    checkSameLength(g, p)
    total = Fraction(0)
    for window in g.onesRuns:
        k = len(overlappingRuns(window, p.onesRuns))
        total += Fraction(1, max(k, 1)) * biasedOverlap(window, p.onesRuns)
    return ratio(total, len(g.onesRuns))

def timeSeriesF1(g, p):
    return harmonicMean(timeSeriesPrecision(g, p), timeSeriesRecall(g, p))

# Spacer for readability
# ------------------------------------------------------------------------------

TIMESEAD = {
    'precision': 'timesead-precision',
    'recall': 'timesead-recall',
    'f1': 'timesead-f1',
}

def scoreTimeSead(kind, g, p):
    from metrics.catalog import scoreFamily
    return scoreFamily(TIMESEAD, kind, g, p)
