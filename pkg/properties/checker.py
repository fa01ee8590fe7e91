# File: properties/checker.py

"""
TsadLab/properties/checker.py

Checks one metric against one property on every enumerated case up to a
length bound. Work is split into one partition per ground truth; partitions
run in-process or on a process pool and are merged in enumeration order, so
the report does not depend on the worker count.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import logging
import math

from metrics.catalog import evaluate, resolveDescriptor
from metrics.descriptor import isUndefined
from properties.definitions import Relation
from properties.enumerator import checkMaxLen, enumerateForTruth, sequenceOf, truthsUpTo
from loggingSetup import workerLogging

EQUAL_TOLERANCE = 1e-12
DEFAULT_WITNESS_LIMIT = 10

# Spacer for readability
# ------------------------------------------------------------------------------

class Verdict(Enum):
    NO_COUNTEREXAMPLE = 'no-counterexample'
    VIOLATED = 'violated'

@dataclass(frozen=True)
class Witness:
    """
    A violating case together with the two scores that violate it.
    """
    case: object
    scoreP: object
    scoreQ: object

@dataclass
class PropertyReport:
    """
    Outcome of check_property for one (metric, property) cell.
    """
    metric: object
    property: object
    maxLen: int
    casesChecked: int = 0
    skipped: int = 0
    violations: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def verdict(self):
        return Verdict.VIOLATED if self.witnesses else Verdict.NO_COUNTEREXAMPLE

    @property
    def violated(self):
        return self.verdict is Verdict.VIOLATED

    def verdictText(self):
        if self.violated:
            return Verdict.VIOLATED.value
        return f"{Verdict.NO_COUNTEREXAMPLE.value}-up-to-{self.maxLen}"

# Spacer for readability
# ------------------------------------------------------------------------------

def _isRational(value):
    return isinstance(value, (int, Fraction))

def compareScores(relation, scoreP, scoreQ):
    """
    True when scoreP REL scoreQ holds.

    Rational scores compare exactly. Otherwise `greater` is a strict float
    comparison and `equal` allows an absolute difference of 1e-12.
    """
    if _isRational(scoreP) and _isRational(scoreQ):
        if relation is Relation.GREATER:
            return scoreP > scoreQ
        return scoreP == scoreQ
    a, b = float(scoreP), float(scoreQ)
    if relation is Relation.GREATER:
        return a > b
    if a == b:
        return True
    return math.isfinite(a) and math.isfinite(b) and abs(a - b) <= EQUAL_TOLERANCE

# Spacer for readability
# ------------------------------------------------------------------------------

def checkTruth(descriptor, prop, gBits, witnessLimit):
    """
    Checks every case of one ground truth. Runs inside worker processes.

    Returns:
        tuple: (checked, skipped, violations, witnesses) for this partition.
    """
    g = sequenceOf(gBits)
    scores = {}

    def scoreOf(seq):
        if seq not in scores:
            scores[seq] = evaluate(descriptor, g, seq)
        return scores[seq]

    checked = skipped = violations = 0
    witnesses = []
    for case in enumerateForTruth(prop, g):
        scoreP, scoreQ = scoreOf(case.p), scoreOf(case.q)
        if isUndefined(scoreP) or isUndefined(scoreQ):
            skipped += 1
            continue
        checked += 1
        if not compareScores(case.expected, scoreP, scoreQ):
            violations += 1
            if len(witnesses) < witnessLimit:
                witnesses.append(Witness(case, scoreP, scoreQ))
    return checked, skipped, violations, witnesses

def _checkTruthPacked(args):
    return checkTruth(*args)

# Spacer for readability
# ------------------------------------------------------------------------------

def checkProperty(metric, prop, maxLen, workers=1, witnessLimit=DEFAULT_WITNESS_LIMIT):
    """
    Evaluates m(g, p) REL m(g, q) on every enumerated case of a property.

    Cases where either score is Undefined are counted as skipped.

    Args:
        metric (str | MetricDescriptor): Metric to check.
        prop (PropertyId): Property to check.
        maxLen (int): Largest sequence length enumerated.
        workers (int): Worker processes; 1 runs in-process.
        witnessLimit (int): Number of witnesses kept, in enumeration order.

    Returns:
        PropertyReport: Counts, verdict and the first witnesses.
    """
    descriptor = resolveDescriptor(metric)
    checkMaxLen(maxLen)
    partitions = [(descriptor, prop, g.bits, witnessLimit) for g in truthsUpTo(maxLen)]
    logging.info(f"Checking {descriptor} against {prop} up to length {maxLen} "
                 f"({len(partitions)} partitions, {workers} worker(s))")

    if workers > 1:
        with workerLogging() as (initializer, initargs), \
                ProcessPoolExecutor(max_workers=workers, initializer=initializer, initargs=initargs) as executor:
            results = list(executor.map(_checkTruthPacked, partitions, chunksize=16))
    else:
        results = [checkTruth(*partition) for partition in partitions]

    report = PropertyReport(descriptor, prop, maxLen)
    for checked, skipped, violations, witnesses in results:
        report.casesChecked += checked
        report.skipped += skipped
        report.violations += violations
        room = witnessLimit - len(report.witnesses)
        report.witnesses.extend(witnesses[:max(room, 0)])

    logging.info(f"{descriptor} {prop}: {report.verdictText()} "
                 f"({report.casesChecked} checked, {report.skipped} skipped)")
    return report
