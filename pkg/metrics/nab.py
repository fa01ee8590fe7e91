# File: metrics/nab.py

"""
TsadLab/metrics/nab.py

The Numenta Anomaly Benchmark score: sigmoid-positioned credit for the first
hit of each anomaly window, sigmoid-decayed penalties for false positives after
an anomaly, a flat penalty before the first anomaly, and the normalisation
between the empty and the perfect prediction.
"""

import bisect
import math

from core.sequence import BinarySeq, checkSameLength, firstOneWithin
from metrics.descriptor import ratio

# Spacer for readability
# ------------------------------------------------------------------------------

def scaledSigmoid(x):
    """
    2 / (1 + e^(5x)) - 1, evaluated as -tanh(5x / 2) so large x cannot overflow.
    """
    return -math.tanh(2.5 * x)

def nabRaw(g, p, aTP=1.0, aFP=0.11, aFN=-1.0):
    """
    The unnormalised score s_NAB(g, p).

    With no anomaly in g every false positive takes the flat -aFP penalty.

    Args:
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.
        aTP (float): Weight of a detection, >= 0.
        aFP (float): Weight of a false positive, >= 0.
        aFN (float): Weight of a missed window, <= 0.

    Returns:
        float: The raw score.
    """
    checkSameLength(g, p)
    aTP, aFP, aFN = float(aTP), float(aFP), float(aFN)
    windows = g.onesRuns
    score = 0.0
    for window in windows:
        first = firstOneWithin(p, window)
        if first is None:
            score += aFN
        else:
            score += aTP * scaledSigmoid(first - window.hi)

    windowEnds = [w.hi for w in windows]
    firstAnomaly = windows[0].lo if windows else None
    for i in p.onePositions:
        if g.at(i) == 1:
            continue
        if firstAnomaly is None or i < firstAnomaly:
            score -= aFP
            continue
        # nearest window that ended before i
        end = windowEnds[bisect.bisect_left(windowEnds, i) - 1]
        score += aFP * scaledSigmoid(i - end)
    return score

def nabNormalized(g, p, aTP=1.0, aFP=0.11, aFN=-1.0):
    """
    100 (s(g, p) - s(g, 0)) / (s(g, g) - s(g, 0)); undefined when the two endpoints coincide.
    """
    checkSameLength(g, p)
    empty = nabRaw(g, BinarySeq.zeros(len(g)), aTP, aFP, aFN)
    perfect = nabRaw(g, g, aTP, aFP, aFN)
    return ratio(100.0 * (nabRaw(g, p, aTP, aFP, aFN) - empty), perfect - empty)

# Spacer for readability
# ------------------------------------------------------------------------------

def scoreNab(aTP, aFP, aFN, g, p, normalized=True):
    """
    Scores the normalised NAB score, or the raw score when normalized is False.
    """
    from metrics.catalog import scoreMetric
    metricId = 'nab' if normalized else 'nab-raw'
    return scoreMetric(metricId, g, p, aTP=aTP, aFP=aFP, aFN=aFN)
