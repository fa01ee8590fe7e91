# File: metrics/pointAdjusted.py

"""
TsadLab/metrics/pointAdjusted.py

Point-adjusted precision, recall and F1: a ground-truth window that contains
any predicted 1 is credited with its full length.
"""

from core.sequence import checkSameLength
from metrics.descriptor import ratio
from metrics.overlap import falsePositives, hitWindows

# Spacer for readability
# ------------------------------------------------------------------------------

def _adjustedCounts(g, p):
    checkSameLength(g, p)
    adjusted = sum(w.length for w in hitWindows(g, p))
    return adjusted, falsePositives(g, p), g.onesCount - adjusted

def paPrecision(g, p):
    adjusted, fp, _ = _adjustedCounts(g, p)
    return ratio(adjusted, adjusted + fp)

def paRecall(g, p):
    adjusted, _, _ = _adjustedCounts(g, p)
    return ratio(adjusted, g.onesCount)

def paF1(g, p):
    adjusted, fp, missed = _adjustedCounts(g, p)
    return ratio(2 * adjusted, 2 * adjusted + fp + missed)

# Spacer for readability
# ------------------------------------------------------------------------------

POINT_ADJUSTED = {
    'precision': 'pa-precision',
    'recall': 'pa-recall',
    'f1': 'pa-f1',
}

def scorePointAdjusted(kind, g, p):
    """
    Scores one point-adjusted metric ('precision', 'recall' or 'f1').
    """
    from metrics.catalog import scoreFamily
    return scoreFamily(POINT_ADJUSTED, kind, g, p)
