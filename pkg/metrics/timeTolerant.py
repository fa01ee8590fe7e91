# File: metrics/timeTolerant.py

"""
TsadLab/metrics/timeTolerant.py

Time-tolerant precision and recall: a point counts when the other sequence has
a 1 within delta steps of it.
"""

import numpy as np

from core.sequence import checkSameLength
from metrics.descriptor import ratio

# Spacer for readability
# ------------------------------------------------------------------------------

def _toleratedHits(source, target, delta):
    """
    Number of ones of source with a one of target in [i - delta, i + delta].
    """
    n = len(source)
    idx = np.flatnonzero(source.array)
    lo = np.maximum(idx - delta, 0)
    hi = np.minimum(idx + delta, n - 1)
    prefix = target.prefixOnes
    return int(np.count_nonzero(prefix[hi + 1] - prefix[lo] > 0))

def tolerantPrecision(g, p, delta=1):
    checkSameLength(g, p)
    return ratio(_toleratedHits(p, g, delta), p.onesCount)

def tolerantRecall(g, p, delta=1):
    checkSameLength(g, p)
    return ratio(_toleratedHits(g, p, delta), g.onesCount)

# Spacer for readability
# ------------------------------------------------------------------------------

TIME_TOLERANT = {
    'precision': 'tolerant-precision',
    'recall': 'tolerant-recall',
}

def scoreTimeTolerant(kind, delta, g, p):
    from metrics.catalog import scoreFamily
    return scoreFamily(TIME_TOLERANT, kind, g, p, delta=delta)
