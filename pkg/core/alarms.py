# File: core/alarms.py

"""
TsadLab/core/alarms.py

Classifies the alarms of a prediction against a ground truth into detected
anomalies (DA), true false alarms (TA), early alarms (EA) and late alarms (LA).
The definitions are applied literally; an alarm spanning a whole anomaly
contributes one early and one late member.
"""

from dataclasses import dataclass

from core.sequence import Interval, checkSameLength, junctionRuns, runsWithin, onesWithin

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class AlarmClassification:
    """
    The four alarm classes of p with respect to g.
    """
    detected: frozenset
    trueFalse: frozenset
    early: frozenset
    late: frozenset

    def asDict(self):
        """
        Sorted interval lists keyed by class name, for reports.
        """
        return {
            'detected': sorted(self.detected),
            'trueFalse': sorted(self.trueFalse),
            'early': sorted(self.early),
            'late': sorted(self.late),
        }

# Spacer for readability
# ------------------------------------------------------------------------------

def _boundaryAlarms(g, p, junctions):
    """
    Clipped alarms of p inside each junction on which g takes both values.
    """
    found = set()
    for junction in junctions:
        for alarm in runsWithin(p, junction):
            anomalous = onesWithin(g, alarm)
            if 0 < anomalous < alarm.length:
                found.add(alarm)
    return found

# Spacer for readability
# ------------------------------------------------------------------------------

def detects(g, alarm, anomaly):
    """
    True when the alarm detects the anomaly: it overlaps it and either starts
    inside it or is preceded inside the anomaly by normal time steps only.
    """
    if not alarm.intersects(anomaly):
        return False
    if alarm.lo in anomaly:
        return True
    # alarm.lo < anomaly.lo here
    return onesWithin(g, Interval(alarm.lo, anomaly.lo - 1)) == 0

# Spacer for readability
# ------------------------------------------------------------------------------

def classifyAlarms(g, p):
    """
    Computes DA, TA, EA and LA of prediction p against ground truth g.

    Args:
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction of the same length.

    Returns:
        AlarmClassification: The four alarm classes.
    """
    checkSameLength(g, p)
    early = _boundaryAlarms(g, p, junctionRuns(g, 0, 1))
    late = _boundaryAlarms(g, p, junctionRuns(g, 1, 0))
    boundary = early | late

    trueFalse = set()
    for alarm in p.onesRuns:
        if onesWithin(g, alarm) == 0 and not any(alarm.isSubsetOf(b) for b in boundary):
            trueFalse.add(alarm)

    detected = set()
    for anomaly in g.onesRuns:
        if any(detects(g, alarm, anomaly) for alarm in p.onesRuns):
            detected.add(anomaly)

    return AlarmClassification(
        detected=frozenset(detected),
        trueFalse=frozenset(trueFalse),
        early=frozenset(early),
        late=frozenset(late),
    )
