# File: metrics/kDelay.py

"""
TsadLab/metrics/kDelay.py

K-delay precision, recall and F1: a window is adjusted only when its first
predicted 1 lies within k steps of the window start.
"""

from core.sequence import checkSameLength
from metrics.descriptor import ratio
from metrics.overlap import falsePositives, firstHits

# Spacer for readability
# ------------------------------------------------------------------------------

def _timelyLength(g, p, k):
    checkSameLength(g, p)
    # a window without a hit has first hit +inf and never counts
    return sum(window.length for window, first in firstHits(g, p) if first <= window.lo + k)

def kDelayPrecision(g, p, k=1):
    timely = _timelyLength(g, p, k)
    return ratio(timely, falsePositives(g, p) + timely)

def kDelayRecall(g, p, k=1):
    return ratio(_timelyLength(g, p, k), g.onesCount)

def kDelayF1(g, p, k=1):
    timely = _timelyLength(g, p, k)
    return ratio(2 * timely, falsePositives(g, p) + timely + g.onesCount)

# Spacer for readability
# ------------------------------------------------------------------------------

K_DELAY = {
    'precision': 'kdelay-precision',
    'recall': 'kdelay-recall',
    'f1': 'kdelay-f1',
}

def scoreKDelay(kind, k, g, p):
    """
    Scores one k-delay metric.

    Args:
        kind (str): 'precision', 'recall' or 'f1'.
        k (int): Delay budget, k >= 0.
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.

    Returns:
        ScoreResult: The score.
    """
    from metrics.catalog import scoreFamily
    return scoreFamily(K_DELAY, kind, g, p, k=k)
