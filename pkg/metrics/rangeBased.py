# File: metrics/rangeBased.py

"""
TsadLab/metrics/rangeBased.py

Range-based precision, recall and F1 with the front-biased positional weight
and the 1/k cardinality factor. Also hosts the biased-overlap helpers the
TimeSeAD family reuses.
"""

from fractions import Fraction

from core.sequence import checkSameLength
from metrics.descriptor import ratio, harmonicMean
from metrics.overlap import overlappingRuns

# Spacer for readability
# ------------------------------------------------------------------------------

def frontBiasTotal(window):
    """
    Sum of the front-bias weights |W|, |W|-1, ..., 1 over a window.
    """
    m = window.length
    return m * (m + 1) // 2

def frontBiasWeight(window, part):
    """
    Front-bias weight of the sub-interval `part` of `window`.

    Position i of W carries weight max W - i + 1, so the first position of the
    window weighs |W| and the last weighs 1.
    """
    first = window.hi - part.lo + 1
    last = window.hi - part.hi + 1
    return (first + last) * (first - last + 1) // 2

def biasedOverlap(window, others):
    """
    Sum over `others` of the front-biased share of `window` they cover.

    Args:
        window (Interval): The window whose positions are weighted.
        others (list): Intervals of the other sequence.

    Returns:
        Fraction: A value in [0, 1].
    """
    covered = 0
    for other in others:
        part = window.intersection(other)
        if part is not None:
            covered += frontBiasWeight(window, part)
    return Fraction(covered, frontBiasTotal(window))

def cardinalityFactor(window, others):
    """
    1 when at most one run of `others` meets the window, else 1/k for k runs.
    """
    k = len(overlappingRuns(window, others))
    return Fraction(1) if k <= 1 else Fraction(1, k)

# Spacer for readability
# ------------------------------------------------------------------------------

def rangePrecision(g, p):
    checkSameLength(g, p)
    alarms = p.onesRuns
    total = sum((cardinalityFactor(w, g.onesRuns) * biasedOverlap(w, g.onesRuns) for w in alarms), Fraction(0))
    return ratio(total, len(alarms))

def rangeRecall(g, p, alphaWeight=Fraction(0)):
    """
    Average over anomaly windows of the existence reward plus the biased overlap.
    """
    checkSameLength(g, p)
    anomalies = g.onesRuns
    total = Fraction(0)
    for window in anomalies:
        existence = 1 if overlappingRuns(window, p.onesRuns) else 0
        overlap = cardinalityFactor(window, p.onesRuns) * biasedOverlap(window, p.onesRuns)
        total += alphaWeight * existence + (1 - alphaWeight) * overlap
    return ratio(total, len(anomalies))

def rangeF1(g, p, alphaWeight=Fraction(0)):
    return harmonicMean(rangePrecision(g, p), rangeRecall(g, p, alphaWeight))

# Spacer for readability
# ------------------------------------------------------------------------------

RANGE_BASED = {
    'precision': 'range-precision',
    'recall': 'range-recall',
    'f1': 'range-f1',
}

def scoreRangeBased(kind, alphaWeight, g, p):
    """
    Scores one range-based metric. alphaWeight is ignored by precision.
    """
    from metrics.catalog import scoreFamily
    params = {} if kind == 'precision' else {'alphaWeight': alphaWeight}
    return scoreFamily(RANGE_BASED, kind, g, p, **params)
