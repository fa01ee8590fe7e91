# File: metrics/paExtensions.py

"""
TsadLab/metrics/paExtensions.py

Refinements of the point-adjusted F1: the PA%K threshold and its integral over
K, the decay-weighted variant, reduced-length weighting, the balanced variant
and the latency- and sparsity-aware block F1.
"""

from fractions import Fraction
import math

import numpy as np

from core.sequence import checkSameLength, onesWithin
from metrics.descriptor import ratio, isUndefined, UNDEFINED
from metrics.overlap import falsePositives, firstHits, hitWindows, missedWindows

# Spacer for readability
# ------------------------------------------------------------------------------

def _windowOverlaps(g, p):
    return [(window, onesWithin(p, window)) for window in g.onesRuns]

def _percentKF1(overlaps, fp, kPercent):
    credited = 0
    missed = 0
    for window, hit in overlaps:
        if Fraction(hit, window.length) > kPercent:
            credited += window.length
        else:
            credited += hit
            missed += window.length - hit
    return ratio(2 * credited, 2 * credited + fp + missed)

def paPercentK(g, p, kPercent=Fraction(1, 2)):
    """
    F1 where a window is adjusted only when more than a kPercent share of it is predicted.

    Args:
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.
        kPercent (Fraction): Threshold in [0, 1].

    Returns:
        Fraction | Undefined: The score.
    """
    checkSameLength(g, p)
    return _percentKF1(_windowOverlaps(g, p), falsePositives(g, p), kPercent)

def paPercentKIntegrated(g, p):
    """
    Exact integral of the PA%K F1 over K in [0, 1].

    The integrand is a step function that only changes at the overlap ratios
    of the ground-truth windows, so the integral is a finite sum of segment
    lengths times the value at each segment's left end.
    """
    checkSameLength(g, p)
    overlaps = _windowOverlaps(g, p)
    fp = falsePositives(g, p)
    cuts = {Fraction(0), Fraction(1)}
    cuts.update(Fraction(hit, w.length) for w, hit in overlaps if 0 < hit < w.length)
    cuts = sorted(cuts)

    total = Fraction(0)
    for left, right in zip(cuts, cuts[1:]):
        value = _percentKF1(overlaps, fp, left)
        if isUndefined(value):
            return UNDEFINED
        total += (right - left) * value
    return total

# Spacer for readability
# ------------------------------------------------------------------------------

def paDecay(g, p, d=Fraction(1, 2)):
    """
    Point-adjusted F1 whose credit for a window decays as d^(delay of first hit).
    """
    checkSameLength(g, p)
    hits = firstHits(g, p)
    credit = sum((d ** (first - window.lo) * window.length for window, first in hits), Fraction(0))
    adjusted = sum(window.length for window, _ in hits)
    missed = g.onesCount - adjusted
    return ratio(2 * credit, 2 * adjusted + falsePositives(g, p) + missed)

def reducedLengthF1(g, p):
    checkSameLength(g, p)
    credit = sum((math.log(w.length) for w in hitWindows(g, p)), 0.0)
    missed = sum((math.log(w.length) for w in missedWindows(g, p)), 0.0)
    return ratio(2 * credit, 2 * credit + falsePositives(g, p) + missed)

# Spacer for readability
# ------------------------------------------------------------------------------

def balancedPaF1(g, p, B=1):
    """
    Balanced point-adjusted F1 with the symmetric neighbourhood [i - B, i + B].

    Normal points next to a false positive count as extra false positives;
    points of a missed window next to a false positive count as true positives.
    """
    checkSameLength(g, p)
    n = len(g)
    truth = g.array.astype(bool)
    pred = p.array.astype(bool)
    falseHits = pred & ~truth
    prefix = np.concatenate(([0], np.cumsum(falseHits, dtype=np.int64)))
    idx = np.arange(n)
    lo = np.maximum(idx - B, 0)
    hi = np.minimum(idx + B, n - 1)
    near = (prefix[hi + 1] - prefix[lo]) > 0

    tp = sum(w.length for w in hitWindows(g, p))
    fn = 0
    for window in missedWindows(g, p):
        nearWindow = near[window.lo - 1:window.hi]
        tp += int(np.count_nonzero(nearWindow))
        fn += int(np.count_nonzero(~nearWindow))
    fp = int(np.count_nonzero(~pred & ~truth & near)) + int(np.count_nonzero(falseHits))
    return ratio(2 * tp, 2 * tp + fp + fn)

# Spacer for readability
# ------------------------------------------------------------------------------

def lsaF1(g, p, b=3):
    """
    Latency- and sparsity-aware F1 over blocks of b time steps.

    Blocks are numbered from 0. A block is marked when g is 1 at its first
    position; inside a run of marked blocks the prediction of block i is the
    maximum of p from the start of the run up to the end of block i.
    """
    checkSameLength(g, p)
    n = len(g)
    blocks = -(-n // b)
    gBits, pBits = g.bits, p.bits

    def blockMax(bits, first, block):
        return max(bits[b * first:min(b * (block + 1), n)])

    marked = [gBits[b * i] == 1 for i in range(blocks)]
    start = list(range(blocks))
    for i in range(1, blocks):
        if marked[i] and marked[i - 1]:
            start[i] = start[i - 1]

    tp = fp = fn = 0
    for i in range(blocks):
        truth = blockMax(gBits, i, i)
        pred = blockMax(pBits, start[i] if marked[i] else i, i)
        tp += truth & pred
        fp += pred & (1 - truth)
        fn += truth & (1 - pred)
    return ratio(2 * tp, 2 * tp + fp + fn)

# Spacer for readability
# ------------------------------------------------------------------------------

PA_EXTENSIONS = {
    'pa_percent_k': 'pa-percent-k',
    'pa_percent_k_integrated': 'pa-percent-k-integrated',
    'pa_decay': 'pa-decay',
    'reduced_length': 'reduced-length-f1',
    'balanced_pa': 'balanced-pa-f1',
    'lsa_f1': 'lsa-f1',
}

def scorePaExtension(kind, params, g, p):
    """
    Scores one point-adjusted refinement.

    Args:
        kind (str): Key of PA_EXTENSIONS, e.g. 'pa_decay'.
        params (dict): Parameters of that metric; missing ones take defaults.
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.

    Returns:
        ScoreResult: The score.
    """
    from metrics.catalog import scoreFamily
    return scoreFamily(PA_EXTENSIONS, kind, g, p, **(params or {}))
