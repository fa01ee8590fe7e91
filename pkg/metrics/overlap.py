# File: metrics/overlap.py

"""
TsadLab/metrics/overlap.py

Counting helpers shared by the window-based metric families: true and false
positive points, hit and missed ground-truth windows, first hits.
"""

import numpy as np

from core.sequence import onesWithin, firstOneWithin

# Spacer for readability
# ------------------------------------------------------------------------------

def truePositives(g, p):
    """
    |p^-1(1) ∩ g^-1(1)|.
    """
    return int(np.count_nonzero(g.array & p.array))

def falsePositives(g, p):
    """
    |p^-1(1) ∩ g^-1(0)|.
    """
    return p.onesCount - truePositives(g, p)

def hitWindows(g, p):
    """
    Ground-truth windows that contain at least one predicted 1.
    """
    return [w for w in g.onesRuns if onesWithin(p, w) > 0]

def missedWindows(g, p):
    return [w for w in g.onesRuns if onesWithin(p, w) == 0]

def falseAlarms(g, p):
    """
    Predicted alarms disjoint from every ground-truth window.
    """
    return [a for a in p.onesRuns if onesWithin(g, a) == 0]

def firstHits(g, p):
    """
    (window, first predicted 1 inside it) for every hit window.
    """
    hits = []
    for window in g.onesRuns:
        first = firstOneWithin(p, window)
        if first is not None:
            hits.append((window, first))
    return hits

def overlappingRuns(window, others):
    """
    Runs from `others` that intersect the window.
    """
    return [run for run in others if run.intersects(window)]
