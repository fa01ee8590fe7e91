# File: core/sequence.py

"""
TsadLab/core/sequence.py

Binary sequences, closed 1-based intervals and the maximal-run algebra used by
every metric: alarms I_v(s), junction runs I_uv(s) and runs clipped to a window.
"""

from dataclasses import dataclass, field
from functools import cached_property
import numpy as np

from core.errors import SequenceError, LengthMismatchError

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Interval:
    """
    Closed integer interval [lo, hi] over 1-based positions.
    """
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo:
            raise SequenceError(f"invalid interval [{self.lo},{self.hi}]")

    @property
    def length(self):
        return self.hi - self.lo + 1

    def __contains__(self, position):
        return self.lo <= position <= self.hi

    def positions(self):
        return range(self.lo, self.hi + 1)

    def intersects(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other):
        """
        Returns the overlapping interval, or None when the two are disjoint.
        """
        if not self.intersects(other):
            return None
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def isSubsetOf(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self):
        return f"[{self.lo},{self.hi}]"

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class BinarySeq:
    """
    Immutable sequence over {0, 1} of length n >= 1.

    Bits are stored 0-based in `bits`; every public position argument
    (intervals, `at`) is 1-based so that the domain is [n] = {1, ..., n}.
    """
    bits: tuple = field()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise SequenceError("a binary sequence needs at least one element")
        if any(b not in (0, 1) for b in bits):
            raise SequenceError("binary sequences may only contain 0 and 1")
        object.__setattr__(self, 'bits', bits)

    @classmethod
    def fromString(cls, text):
        """
        Parses a string such as '000110' (whitespace is ignored).

        Args:
            text (str): Characters '0' and '1', optionally separated by whitespace.

        Returns:
            BinarySeq: The parsed sequence.
        """
        chars = ''.join(text.split())
        if not chars or set(chars) - {'0', '1'}:
            raise SequenceError(f"not a 0/1 string: '{text.strip()}'")
        return cls(tuple(int(c) for c in chars))

    @classmethod
    def zeros(cls, n):
        return cls((0,) * n)

    @classmethod
    def fromIntervals(cls, n, intervals):
        """
        Builds a length-n sequence whose ones are exactly the given intervals.
        """
        if n < 1:
            raise SequenceError("a binary sequence needs at least one element")
        bits = [0] * n
        for interval in intervals:
            if interval.hi > n:
                raise SequenceError(f"interval {interval} exceeds length {n}")
            for i in interval.positions():
                bits[i - 1] = 1
        return cls(tuple(bits))

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return ''.join(str(b) for b in self.bits)

    def at(self, position):
        """
        Returns the bit at a 1-based position.
        """
        if not 1 <= position <= len(self.bits):
            raise SequenceError(f"position {position} outside [1,{len(self.bits)}]")
        return self.bits[position - 1]

    def withBits(self, changes):
        """
        Returns a copy with {position: bit} changes applied (1-based positions).
        """
        bits = list(self.bits)
        for position, bit in changes.items():
            bits[position - 1] = bit
        return BinarySeq(tuple(bits))

    @cached_property
    def array(self):
        return np.asarray(self.bits, dtype=np.int8)

    @cached_property
    def prefixOnes(self):
        # prefixOnes[i] = number of ones in positions 1..i
        return np.concatenate(([0], np.cumsum(self.array, dtype=np.int64)))

    @cached_property
    def onesCount(self):
        return int(self.prefixOnes[-1])

    @cached_property
    def onesRuns(self):
        return _maximalRuns(self.array)

    @cached_property
    def zerosRuns(self):
        return _maximalRuns(1 - self.array)

    @cached_property
    def onePositions(self):
        return tuple(int(i) + 1 for i in np.flatnonzero(self.array))

# Spacer for readability
# ------------------------------------------------------------------------------

def _maximalRuns(values):
    """
    Maximal runs of ones in a 0/1 numpy array as 1-based intervals.
    """
    edges = np.diff(np.concatenate(([0], values, [0])).astype(np.int8))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    return tuple(Interval(int(s) + 1, int(e)) for s, e in zip(starts, ends))

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class AlarmSets:
    """
    Interval decomposition of one sequence.
    """
    ones: tuple
    zeros: tuple
    junctions01: tuple
    junctions10: tuple

# Spacer for readability
# ------------------------------------------------------------------------------

def checkSameLength(g, *others):
    """
    Raises LengthMismatchError unless every sequence has the length of g.
    """
    for other in others:
        if len(other) != len(g):
            raise LengthMismatchError(len(g), len(other))

# Spacer for readability
# ------------------------------------------------------------------------------

def runs(seq, value=1):
    """
    Maximal runs of `value` in the sequence, sorted by start.

    Args:
        seq (BinarySeq): The sequence to decompose.
        value (int): 0 or 1.

    Returns:
        list: Intervals I_value(seq); empty when the value never occurs.
    """
    if value not in (0, 1):
        raise SequenceError(f"run value must be 0 or 1, got {value}")
    return list(seq.onesRuns if value == 1 else seq.zerosRuns)

# Spacer for readability
# ------------------------------------------------------------------------------

def junctionRuns(seq, u, v):
    """
    Unions of a maximal u-run immediately followed by a maximal v-run.

    Args:
        seq (BinarySeq): The sequence to decompose.
        u (int): Value of the leading run.
        v (int): Value of the trailing run, must differ from u.

    Returns:
        list: Intervals I_uv(seq), sorted by start.
    """
    if u == v or {u, v} != {0, 1}:
        raise SequenceError(f"junction runs need distinct bits, got {u}{v}")
    leading = {run.hi: run for run in runs(seq, u)}
    junctions = []
    for trailing in runs(seq, v):
        before = leading.get(trailing.lo - 1)
        if before is not None:
            junctions.append(Interval(before.lo, trailing.hi))
    return junctions

# Spacer for readability
# ------------------------------------------------------------------------------

def alarmSets(seq):
    return AlarmSets(
        ones=tuple(seq.onesRuns),
        zeros=tuple(seq.zerosRuns),
        junctions01=tuple(junctionRuns(seq, 0, 1)),
        junctions10=tuple(junctionRuns(seq, 1, 0)),
    )

# Spacer for readability
# ------------------------------------------------------------------------------

def onesWithin(seq, window):
    """
    Number of ones of seq inside the window.
    """
    return int(seq.prefixOnes[window.hi] - seq.prefixOnes[window.lo - 1])

def runsWithin(seq, window, value=1):
    """
    Maximal runs of seq restricted to the window, I_value(seq_W).

    Runs that cross the window boundary are clipped to it.
    """
    clipped = []
    for run in (seq.onesRuns if value == 1 else seq.zerosRuns):
        if run.hi < window.lo:
            continue
        if run.lo > window.hi:
            break
        clipped.append(run.intersection(window))
    return clipped

def firstOneWithin(seq, window):
    """
    1-based position of the first one inside the window, or None.
    """
    for run in seq.onesRuns:
        if run.hi >= window.lo and run.lo <= window.hi:
            return max(run.lo, window.lo)
        if run.lo > window.hi:
            break
    return None
