# File: metrics/affiliation.py

"""
TsadLab/metrics/affiliation.py

Affiliation precision, recall and F1. Each time step is affiliated with the
nearest anomaly window; a step equidistant from two windows belongs to the
earlier one. Distances are normalised by the size of the affiliation zone.
"""

from fractions import Fraction

import numpy as np

from core.sequence import Interval, checkSameLength
from metrics.descriptor import ratio, harmonicMean, UNDEFINED

# Spacer for readability
# ------------------------------------------------------------------------------

def affiliationZones(g):
    """
    The affiliation zone I_W of every anomaly window W of g.

    Returns:
        list: (window, zone) pairs in window order; empty when g has no anomalies.
    """
    windows = g.onesRuns
    if not windows:
        return []
    positions = np.arange(1, len(g) + 1)
    distances = np.stack([np.maximum(np.maximum(w.lo - positions, positions - w.hi), 0) for w in windows])
    # argmin keeps the first minimum, which sends ties to the earlier window
    owner = np.argmin(distances, axis=0)
    zones = []
    for k, window in enumerate(windows):
        members = positions[owner == k]
        zones.append((window, Interval(int(members[0]), int(members[-1]))))
    return zones

def _distanceToWindow(i, window):
    return max(window.lo - i, i - window.hi, 0)

# Spacer for readability
# ------------------------------------------------------------------------------

def affiliationPrecision(g, p):
    """
    Average over windows whose zone holds predictions of the mean precision
    probability of those predictions.
    """
    checkSameLength(g, p)
    if g.onesCount == 0 or p.onesCount == 0:
        return UNDEFINED
    perWindow = []
    for window, zone in affiliationZones(g):
        predicted = [i for i in p.onePositions if i in zone]
        if not predicted:
            continue
        margin = min(window.lo - zone.lo, zone.hi - window.hi)
        total = Fraction(0)
        for i in predicted:
            d = _distanceToWindow(i, window)
            total += 1 - Fraction(window.length + min(d, margin) + d, zone.length)
        perWindow.append(total / len(predicted))
    return ratio(sum(perWindow, Fraction(0)), len(perWindow))

def affiliationRecall(g, p):
    """
    Average over windows of the mean recall probability of the window's points.

    A zone without predictions makes the distance infinite and the score -inf.
    """
    checkSameLength(g, p)
    zones = affiliationZones(g)
    if not zones:
        return UNDEFINED
    total = Fraction(0)
    for window, zone in zones:
        predicted = np.asarray([i for i in p.onePositions if i in zone])
        if predicted.size == 0:
            return float('-inf')
        windowTotal = Fraction(0)
        for i in window.positions():
            d = int(np.min(np.abs(predicted - i)))
            windowTotal += 1 - Fraction(min(d, min(i - zone.lo, zone.hi - i)) + d, zone.length)
        total += windowTotal / window.length
    return total / len(zones)

def affiliationF1(g, p):
    return harmonicMean(affiliationPrecision(g, p), affiliationRecall(g, p))

# Spacer for readability
# ------------------------------------------------------------------------------

AFFILIATION = {
    'precision': 'affiliation-precision',
    'recall': 'affiliation-recall',
    'f1': 'affiliation-f1',
}

def scoreAffiliation(kind, g, p):
    from metrics.catalog import scoreFamily
    return scoreFamily(AFFILIATION, kind, g, p)
