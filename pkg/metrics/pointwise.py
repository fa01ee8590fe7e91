# File: metrics/pointwise.py

"""
TsadLab/metrics/pointwise.py

Point-wise precision, recall and F1.
"""

from core.sequence import checkSameLength
from metrics.descriptor import ratio
from metrics.overlap import truePositives

# Spacer for readability
# ------------------------------------------------------------------------------

def pointwisePrecision(g, p):
    checkSameLength(g, p)
    return ratio(truePositives(g, p), p.onesCount)

def pointwiseRecall(g, p):
    checkSameLength(g, p)
    return ratio(truePositives(g, p), g.onesCount)

def pointwiseF1(g, p):
    """
    2TP / (|p^-1(1)| + |g^-1(1)|); undefined only when both sequences are all zero.
    """
    checkSameLength(g, p)
    return ratio(2 * truePositives(g, p), p.onesCount + g.onesCount)

# Spacer for readability
# ------------------------------------------------------------------------------

POINTWISE = {
    'precision': 'pointwise-precision',
    'recall': 'pointwise-recall',
    'f1': 'pointwise-f1',
}

def scorePointwise(kind, g, p):
    """
    Scores one point-wise metric.

    Args:
        kind (str): 'precision', 'recall' or 'f1'.
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.

    Returns:
        ScoreResult: The score.
    """
    from metrics.catalog import scoreFamily
    return scoreFamily(POINTWISE, kind, g, p)
