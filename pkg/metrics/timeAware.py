# File: metrics/timeAware.py

"""
TsadLab/metrics/timeAware.py

Time-series aware precision and recall (TaP, TaR) and their enhanced variants
(eTaP, eTaR).
"""

from fractions import Fraction
import math

from core.sequence import checkSameLength
from metrics.descriptor import ratio, UNDEFINED

# Spacer for readability
# ------------------------------------------------------------------------------

def tailKernel(j, windowEnd, delta):
    """
    Credit for a predicted point j in the delta steps after a window ends.

    The sigmoid 1 / (1 + e^(12 (j - 2 - max W) / (delta - 1) - 6)) degenerates at
    delta = 1, where its limit at j = max W + 1 is exactly 1.
    """
    if delta == 1:
        return Fraction(1)
    exponent = 12 * (j - 2 - windowEnd) / (delta - 1) - 6
    return 1.0 / (1.0 + math.exp(exponent))

def tolerantOverlap(anomaly, alarm, delta):
    """
    O(W, W_p): points of the alarm inside the anomaly plus kernel credit for
    alarm points in [max W + 1, max W + delta].
    """
    part = anomaly.intersection(alarm)
    total = part.length if part is not None else 0
    for j in range(max(anomaly.hi + 1, alarm.lo), min(anomaly.hi + delta, alarm.hi) + 1):
        total += tailKernel(j, anomaly.hi, delta)
    return total

# Spacer for readability
# ------------------------------------------------------------------------------

def _timeAwareAverage(windows, others, overlapOf, alphaWeight, theta, clamp):
    if not windows:
        return None
    reached = 0
    coverage = 0
    for window in windows:
        share = ratio(sum((overlapOf(window, other) for other in others), 0), window.length)
        if share >= theta:
            reached += 1
        coverage += min(1, share) if clamp else share
    count = len(windows)
    return alphaWeight * Fraction(reached, count) + (1 - alphaWeight) * ratio(coverage, count)

def timeAwarePrecision(g, p, alphaWeight=Fraction(1, 2), delta=1, theta=Fraction(1, 2)):
    """
    TaP: threshold reward plus average coverage over the predicted alarms.

    Args:
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.
        alphaWeight (Fraction): Weight of the threshold term in [0, 1].
        delta (int): Length of the tolerance tail after each anomaly.
        theta (Fraction): Coverage threshold > 0.

    Returns:
        Fraction | float | Undefined: The score; float when delta > 1.
    """
    checkSameLength(g, p)
    value = _timeAwareAverage(
        p.onesRuns, g.onesRuns,
        lambda alarm, anomaly: tolerantOverlap(anomaly, alarm, delta),
        alphaWeight, theta, clamp=False,
    )
    return UNDEFINED if value is None else value

def timeAwareRecall(g, p, alphaWeight=Fraction(1, 2), delta=1, theta=Fraction(1, 2)):
    """
    TaR: threshold reward plus average coverage, clamped at 1, over the anomaly windows.
    """
    checkSameLength(g, p)
    value = _timeAwareAverage(
        g.onesRuns, p.onesRuns,
        lambda anomaly, alarm: tolerantOverlap(anomaly, alarm, delta),
        alphaWeight, theta, clamp=True,
    )
    return UNDEFINED if value is None else value

# Spacer for readability
# ------------------------------------------------------------------------------

def _coverage(window, others):
    return sum((Fraction(part.length, window.length)
                for part in (window.intersection(o) for o in others) if part is not None), Fraction(0))

def survivingWindows(g, p, thetaP=Fraction(1, 2), thetaR=Fraction(1, 2)):
    """
    Resolves the mutually dependent anomaly set A and alarm set P.

    Starts from all windows and alternately keeps the anomalies covered at
    least thetaR by P and the alarms covered at least thetaP by A until
    neither set changes. Both sets only shrink, so this terminates.

    Returns:
        tuple: (A, P) as lists of intervals.
    """
    anomalies, alarms = list(g.onesRuns), list(p.onesRuns)
    while True:
        keptAnomalies = [w for w in g.onesRuns if _coverage(w, alarms) >= thetaR]
        keptAlarms = [w for w in p.onesRuns if _coverage(w, keptAnomalies) >= thetaP]
        if keptAnomalies == anomalies and keptAlarms == alarms:
            return anomalies, alarms
        anomalies, alarms = keptAnomalies, keptAlarms

def enhancedTimeAwarePrecision(g, p, thetaP=Fraction(1, 2), thetaR=Fraction(1, 2)):
    checkSameLength(g, p)
    if not p.onesRuns:
        return UNDEFINED
    anomalies, alarms = survivingWindows(g, p, thetaP, thetaR)
    norm = sum(math.sqrt(w.length) for w in p.onesRuns)
    credit = sum((1 + float(_coverage(w, anomalies))) * math.sqrt(w.length) for w in alarms)
    return 0.5 * credit / norm

def enhancedTimeAwareRecall(g, p, thetaP=Fraction(1, 2), thetaR=Fraction(1, 2)):
    checkSameLength(g, p)
    if not g.onesRuns:
        return UNDEFINED
    anomalies, alarms = survivingWindows(g, p, thetaP, thetaR)
    credit = sum((1 + _coverage(w, alarms) for w in anomalies), Fraction(0))
    return credit / (2 * len(g.onesRuns))

# Spacer for readability
# ------------------------------------------------------------------------------

TIME_AWARE = {
    'precision': 'tap',
    'recall': 'tar',
}

ENHANCED_TIME_AWARE = {
    'precision': 'etap',
    'recall': 'etar',
}

def scoreTimeAware(kind, alphaWeight, delta, theta, g, p):
    from metrics.catalog import scoreFamily
    return scoreFamily(TIME_AWARE, kind, g, p, alphaWeight=alphaWeight, delta=delta, theta=theta)

def scoreEnhancedTimeAware(kind, thetaP, thetaR, g, p):
    from metrics.catalog import scoreFamily
    return scoreFamily(ENHANCED_TIME_AWARE, kind, g, p, thetaP=thetaP, thetaR=thetaR)
