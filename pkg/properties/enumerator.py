# File: properties/enumerator.py

"""
TsadLab/properties/enumerator.py

Exhaustive enumeration of the (g, p, q) triples that satisfy a property
hypothesis. Every hypothesis confines the difference between p and q to one
region of g (an anomaly window, a normal window, a window pair or the normal
positions as a whole); the enumerator varies q over that region only and
then filters with the precondition predicate.
"""

from functools import lru_cache
from itertools import product
import logging

from core.alarms import classifyAlarms
from core.errors import ParameterError
from core.sequence import BinarySeq
from properties.definitions import PropertyCase, precondition

MAX_ENUMERATION_LENGTH = 16

# Spacer for readability
# ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def sequenceOf(bits):
    """
    Shared BinarySeq instance per bit tuple so cached run data is reused.
    """
    return BinarySeq(bits)

@lru_cache(maxsize=1 << 16)
def classifyCached(g, s):
    return classifyAlarms(g, s)

def checkMaxLen(maxLen):
    if not isinstance(maxLen, int) or not 1 <= maxLen <= MAX_ENUMERATION_LENGTH:
        raise ParameterError(f"maxLen must be an integer in [1, {MAX_ENUMERATION_LENGTH}], got {maxLen}")
    return maxLen

# Spacer for readability
# ------------------------------------------------------------------------------

def _windowPositions(window):
    return [i - 1 for i in window.positions()]

def _regions(prop, g):
    """
    0-based position lists within which p and q may differ for this property.
    """
    index = prop.index
    if prop.isAdvanced:
        if index in (5, 6):
            return [[i for i, bit in enumerate(g.bits) if bit == 0]]
        if index in (3, 4):
            return [_windowPositions(w) for w in g.zerosRuns]
        return [_windowPositions(w) for w in g.onesRuns]
    if index in (3, 4, 5):
        return [_windowPositions(w) for w in g.zerosRuns]
    if index == 6:
        return [sorted(_windowPositions(a) + _windowPositions(n)) for a in g.onesRuns for n in g.zerosRuns]
    return [_windowPositions(w) for w in g.onesRuns]

def _variants(pBits, region):
    """
    Every bit tuple equal to pBits outside the region.
    """
    base = list(pBits)
    for assignment in product((0, 1), repeat=len(region)):
        for position, bit in zip(region, assignment):
            base[position] = bit
        yield tuple(base)

# Spacer for readability
# ------------------------------------------------------------------------------

def enumerateForTruth(prop, g):
    """
    All cases of one property for a fixed ground truth, sorted by (p, q).

    Args:
        prop (PropertyId): The property.
        g (BinarySeq): Ground truth.

    Yields:
        PropertyCase: Triples whose precondition holds.
    """
    n = len(g)
    regions = _regions(prop, g)
    if not regions:
        return
    candidates = set()
    for pBits in product((0, 1), repeat=n):
        for region in regions:
            for qBits in _variants(pBits, region):
                candidates.add((pBits, qBits))
    for pBits, qBits in sorted(candidates):
        p, q = sequenceOf(pBits), sequenceOf(qBits)
        relation = precondition(prop, g, p, q, classify=classifyCached)
        if relation is not None:
            yield PropertyCase(g, p, q, relation)

def truthsUpTo(maxLen):
    """
    Every ground truth of length 1..maxLen in (n, lexicographic) order.
    """
    for n in range(1, maxLen + 1):
        for bits in product((0, 1), repeat=n):
            yield sequenceOf(bits)

def enumerateCases(prop, maxLen):
    """
    Streams every case of a property with length at most maxLen.

    The order is deterministic: by length, then g, p and q lexicographically.

    Args:
        prop (PropertyId): The property.
        maxLen (int): Largest sequence length, 1 <= maxLen <= 16.

    Yields:
        PropertyCase: The enumerated cases.

    Raises:
        ParameterError: maxLen is outside the guard range.
    """
    checkMaxLen(maxLen)
    logging.info(f"Enumerating {prop} up to length {maxLen}")
    for g in truthsUpTo(maxLen):
        yield from enumerateForTruth(prop, g)

def bruteForceCases(prop, n):
    """
    Filters all 8^n triples of length n with the precondition; the oracle for enumerateCases.
    """
    checkMaxLen(n)
    for gBits in product((0, 1), repeat=n):
        g = sequenceOf(gBits)
        for pBits in product((0, 1), repeat=n):
            for qBits in product((0, 1), repeat=n):
                p, q = sequenceOf(pBits), sequenceOf(qBits)
                relation = precondition(prop, g, p, q, classify=classifyCached)
                if relation is not None:
                    yield PropertyCase(g, p, q, relation)
