# File: metrics/eventWise.py

"""
TsadLab/metrics/eventWise.py

Event-wise precision, recall and F1 count windows and alarms instead of
points. The composite F1 combines point-wise precision with event-wise recall.
"""

from core.sequence import checkSameLength
from metrics.descriptor import ratio, harmonicMean
from metrics.overlap import falseAlarms, hitWindows
from metrics.pointwise import pointwisePrecision

# Spacer for readability
# ------------------------------------------------------------------------------

def _eventCounts(g, p):
    checkSameLength(g, p)
    hits = len(hitWindows(g, p))
    return hits, len(falseAlarms(g, p)), len(g.onesRuns) - hits

def eventPrecision(g, p):
    """
    Detected windows over detected windows plus false alarms.
    """
    hits, alarms, _ = _eventCounts(g, p)
    return ratio(hits, hits + alarms)

def eventRecall(g, p):
    hits, _, _ = _eventCounts(g, p)
    return ratio(hits, len(g.onesRuns))

def eventF1(g, p):
    hits, alarms, missed = _eventCounts(g, p)
    return ratio(2 * hits, 2 * hits + alarms + missed)

def compositeF1(g, p):
    """
    Harmonic mean of point-wise precision and event-wise recall.
    """
    return harmonicMean(pointwisePrecision(g, p), eventRecall(g, p))

# Spacer for readability
# ------------------------------------------------------------------------------

EVENT_WISE = {
    'precision': 'event-precision',
    'recall': 'event-recall',
    'f1': 'event-f1',
    'composite_f1': 'composite-f1',
}

def scoreEventWise(kind, g, p):
    from metrics.catalog import scoreFamily
    return scoreFamily(EVENT_WISE, kind, g, p)
