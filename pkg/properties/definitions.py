# File: properties/definitions.py

"""
TsadLab/properties/definitions.py

Property identifiers, cases and the precondition predicates of the simple
properties P1-P9 and the advanced properties A1-A9. Every predicate is a
literal reading of the property hypothesis; `p` is always the prediction that
the property says should score at least as high as `q`.
"""

from dataclasses import dataclass
from enum import Enum

from core.alarms import classifyAlarms
from core.errors import UnknownPropertyError
from core.sequence import (
    Interval, checkSameLength, firstOneWithin, onesWithin, runsWithin,
)

# Spacer for readability
# ------------------------------------------------------------------------------

SIMPLE = 'simple'
ADVANCED = 'advanced'

PROPERTY_NAMES = {
    1: 'detection of anomalies',
    2: 'redundant alarms',
    3: 'minimizing false positives',
    4: 'minimizing false alarms',
    5: 'invariance under permutation of false positives',
    6: "keeping user's trust",
    7: 'maximizing true positives',
    8: 'alarm timing',
    9: 'early bias',
}

ADVANCED_NAMES = {**PROPERTY_NAMES, 6: 'weighing different types of alarms'}

@dataclass(frozen=True)
class PropertyId:
    """
    P1-P9 (family 'simple') or A1-A9 (family 'advanced').
    """
    family: str
    index: int

    def __post_init__(self):
        if self.family not in (SIMPLE, ADVANCED) or not 1 <= self.index <= 9:
            raise UnknownPropertyError(f"{self.family}:{self.index}")

    @classmethod
    def parse(cls, text):
        """
        Parses 'P3' or 'a7' into a PropertyId.
        """
        token = text.strip().upper()
        if len(token) != 2 or token[0] not in 'PA' or not token[1].isdigit():
            raise UnknownPropertyError(text.strip())
        return cls(SIMPLE if token[0] == 'P' else ADVANCED, int(token[1]))

    @property
    def isAdvanced(self):
        return self.family == ADVANCED

    @property
    def label(self):
        return f"{'A' if self.isAdvanced else 'P'}{self.index}"

    @property
    def name(self):
        return (ADVANCED_NAMES if self.isAdvanced else PROPERTY_NAMES)[self.index]

    def sortKey(self):
        return (self.isAdvanced, self.index)

    def __str__(self):
        return self.label

SIMPLE_PROPERTIES = tuple(PropertyId(SIMPLE, i) for i in range(1, 10))
ADVANCED_PROPERTIES = tuple(PropertyId(ADVANCED, i) for i in range(1, 10))
ALL_PROPERTIES = SIMPLE_PROPERTIES + ADVANCED_PROPERTIES

def parsePropertyList(text):
    """
    Reads a --properties value: 'all', 'simple', 'advanced' or a comma list like 'P1,P5,A2'.

    Returns:
        tuple: PropertyIds in canonical order, without duplicates.
    """
    token = text.strip().lower()
    if token == 'all':
        return ALL_PROPERTIES
    if token == 'simple':
        return SIMPLE_PROPERTIES
    if token == 'advanced':
        return ADVANCED_PROPERTIES
    chosen = {PropertyId.parse(part) for part in text.split(',') if part.strip()}
    if not chosen:
        raise UnknownPropertyError(text)
    return tuple(sorted(chosen, key=PropertyId.sortKey))

# Spacer for readability
# ------------------------------------------------------------------------------

class Relation(Enum):
    """
    The relation m(g, p) REL m(g, q) a property demands.
    """
    GREATER = 'greater'
    EQUAL = 'equal'

def relationOf(prop):
    return Relation.EQUAL if prop.index == 5 else Relation.GREATER

@dataclass(frozen=True)
class PropertyCase:
    """
    One (g, p, q) triple satisfying a property hypothesis.
    """
    g: object
    p: object
    q: object
    expected: Relation
    provenance: str = 'enumerated'

    def __post_init__(self):
        checkSameLength(self.g, self.p, self.q)

    def asDict(self):
        return {
            'g': str(self.g),
            'p': str(self.p),
            'q': str(self.q),
            'expected': self.expected.value,
        }

# Spacer for readability
# ------------------------------------------------------------------------------

def differingPositions(p, q):
    """
    1-based positions where p and q disagree.
    """
    return [i + 1 for i, (a, b) in enumerate(zip(p.bits, q.bits)) if a != b]

def _inside(positions, window):
    return all(i in window for i in positions)

def _runCount(seq, window):
    return len(runsWithin(seq, window))

def _normalPart(g, interval):
    """
    interval ∩ g^{-1}(0) as an interval, or None when empty.
    """
    zeros = [i for i in interval.positions() if g.at(i) == 0]
    if not zeros:
        return None
    return Interval(zeros[0], zeros[-1])

def _isSwap(p, q, diff, window):
    """
    diff = {i* < i**} inside window with p(i*) = 1 = q(i**) and q(i*) = 0 = p(i**).
    """
    if len(diff) != 2 or not _inside(diff, window):
        return False
    first, second = diff
    return p.at(first) == 1 and q.at(first) == 0 and p.at(second) == 0 and q.at(second) == 1

def _redundantExtension(p, q, diff, window):
    """
    q equals p plus ones on a nonempty I inside the window, I after p's last one there.
    """
    if not diff or not _inside(diff, window):
        return False
    if any(p.at(i) != 0 or q.at(i) != 1 for i in diff):
        return False
    predicted = [i for i in window.positions() if p.at(i) == 1]
    if not predicted or min(diff) <= max(predicted):
        return False
    return _runCount(q, window) == _runCount(p, window) + 1

# Spacer for readability
# ------------------------------------------------------------------------------

def _p1(g, p, q, diff):
    for window in g.onesRuns:
        if _inside(diff, window) and onesWithin(q, window) == 0 and onesWithin(p, window) > 0:
            return True
    return False

def _p2(g, p, q, diff):
    return any(_redundantExtension(p, q, diff, window) for window in g.onesRuns)

def _p3(g, p, q, diff):
    if len(diff) != 1:
        return False
    i = diff[0]
    if g.at(i) != 0 or q.at(i) != 1:
        return False
    window = next(w for w in g.zerosRuns if i in w)
    return _runCount(p, window) == _runCount(q, window)

def _p4(g, p, q, diff):
    for window in g.zerosRuns:
        if _inside(diff, window) and _runCount(p, window) < _runCount(q, window):
            return True
    return False

def _p5(g, p, q, diff):
    if p.onesCount != q.onesCount:
        return False
    for window in g.zerosRuns:
        if _inside(diff, window) and _runCount(p, window) == _runCount(q, window):
            return True
    return False

def _p6(g, p, q, diff):
    for anomaly in g.onesRuns:
        if _runCount(p, anomaly) != _runCount(q, anomaly):
            continue
        for normal in g.zerosRuns:
            if not all(i in anomaly or i in normal for i in diff):
                continue
            if onesWithin(p, normal) == 0 and onesWithin(q, normal) == 1:
                return True
    return False

def _p7(g, p, q, diff):
    if len(diff) != 1:
        return False
    i = diff[0]
    if g.at(i) != 1 or p.at(i) != 1:
        return False
    window = next(w for w in g.onesRuns if i in w)
    return _runCount(p, window) <= _runCount(q, window)

def _p8(g, p, q, diff):
    if p.onesCount != q.onesCount:
        return False
    for window in g.onesRuns:
        if not _inside(diff, window) or _runCount(p, window) != _runCount(q, window):
            continue
        first, other = firstOneWithin(p, window), firstOneWithin(q, window)
        if first is not None and other is not None and first < other:
            return True
    return False

def _p9(g, p, q, diff):
    for window in g.onesRuns:
        if _isSwap(p, q, diff, window) and _runCount(p, window) <= _runCount(q, window):
            return True
    return False

# Spacer for readability
# ------------------------------------------------------------------------------

def _a1(g, p, q, diff, cp, cq):
    for window in g.onesRuns:
        if not _inside(diff, window):
            continue
        if window not in cp.detected or cp.detected - {window} != cq.detected:
            continue
        touching = [alarm for alarm in cp.early | cp.late if alarm.intersects(window)]
        if all(_normalPart(g, alarm) in cq.trueFalse for alarm in touching):
            return True
    return False

def _a2(g, p, q, diff, cp, cq):
    if cp.detected != cq.detected:
        return False
    for window in cp.detected:
        if not _redundantExtension(p, q, diff, window):
            continue
        if any(run.isSubsetOf(window) for run in p.onesRuns):
            return True
    return False

def _a3(g, p, q, diff, cp, cq):
    if len(diff) != 1:
        return False
    i = diff[0]
    return g.at(i) == 0 and q.at(i) == 1 and len(p.onesRuns) <= len(q.onesRuns)

def _a4(g, p, q, diff, cp, cq):
    if cp.detected != cq.detected or p.onesCount != q.onesCount:
        return False
    if not any(_inside(diff, window) for window in g.zerosRuns):
        return False
    counts = [(len(cp.trueFalse), len(cq.trueFalse)), (len(cp.early), len(cq.early)), (len(cp.late), len(cq.late))]
    return all(a <= b for a, b in counts) and sum(a for a, _ in counts) < sum(b for _, b in counts)

def _a5(g, p, q, diff, cp, cq):
    return (
        all(g.at(i) == 0 for i in diff)
        and p.onesCount == q.onesCount
        and cp.early == cq.early
        and cp.late == cq.late
        and len(cp.trueFalse) == len(cq.trueFalse)
    )

def _replaces(g, p, q, diff, removed, added):
    """
    p and q differ only on removed ∪ added, p is 0 on removed and q is 0 on added.
    """
    if removed.intersects(added):
        return False
    if not all(i in removed or i in added for i in diff):
        return False
    return onesWithin(p, removed) == 0 and onesWithin(q, added) == 0

def _a6(g, p, q, diff, cp, cq):
    if p.onesCount != q.onesCount or cp.detected != cq.detected:
        return False
    # (i) an early alarm of q is traded for a true false alarm of p
    for alarm in cq.early:
        earlyPart = _normalPart(g, alarm)
        if earlyPart is None:
            continue
        if any(_replaces(g, p, q, diff, earlyPart, falseAlarm) for falseAlarm in cp.trueFalse):
            return True
    # (ii) a true false alarm of q is traded for a late alarm of p
    for alarm in cp.late:
        latePart = _normalPart(g, alarm)
        if latePart is None:
            continue
        if any(_replaces(g, p, q, diff, falseAlarm, latePart) for falseAlarm in cq.trueFalse):
            return True
    return False

def _a7(g, p, q, diff, cp, cq):
    if len(diff) != 1 or cp.early != cq.early:
        return False
    i = diff[0]
    if p.at(i) != 1:
        return False
    return any(i in window for window in cp.detected & cq.detected)

def _a8(g, p, q, diff, cp, cq):
    if p.onesCount != q.onesCount or cp.early != cq.early or len(cp.late) != len(cq.late):
        return False
    for window in cp.detected & cq.detected:
        if not _inside(diff, window) or _runCount(p, window) != _runCount(q, window):
            continue
        first, other = firstOneWithin(p, window), firstOneWithin(q, window)
        if first is not None and other is not None and first < other:
            return True
    return False

def _a9(g, p, q, diff, cp, cq):
    if cp.early != cq.early or len(cp.late) != len(cq.late):
        return False
    for window in cp.detected & cq.detected:
        if _isSwap(p, q, diff, window) and _runCount(p, window) <= _runCount(q, window):
            return True
    return False

# Spacer for readability
# ------------------------------------------------------------------------------

_SIMPLE_PREDICATES = {1: _p1, 2: _p2, 3: _p3, 4: _p4, 5: _p5, 6: _p6, 7: _p7, 8: _p8, 9: _p9}
_ADVANCED_PREDICATES = {1: _a1, 2: _a2, 3: _a3, 4: _a4, 5: _a5, 6: _a6, 7: _a7, 8: _a8, 9: _a9}

def precondition(prop, g, p, q, classify=classifyAlarms):
    """
    Checks the hypothesis of a property on one triple.

    Args:
        prop (PropertyId): The property.
        g (BinarySeq): Ground truth.
        p (BinarySeq): The prediction that should score higher (or equal for P5/A5).
        q (BinarySeq): The other prediction.
        classify (callable): classifyAlarms or a memoised equivalent.

    Returns:
        Relation | None: The relation the property demands, or None when the
        hypothesis does not hold.
    """
    checkSameLength(g, p, q)
    diff = differingPositions(p, q)
    if prop.isAdvanced:
        holds = _ADVANCED_PREDICATES[prop.index](g, p, q, diff, classify(g, p), classify(g, q))
    else:
        holds = _SIMPLE_PREDICATES[prop.index](g, p, q, diff)
    return relationOf(prop) if holds else None
