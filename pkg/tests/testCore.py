# File: tests/testCore.py

"""
TsadLab/tests/testCore.py

Unit tests for the core module: sequences, runs, junction runs and alarm
classification.
"""

import unittest
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from core.alarms import classifyAlarms, detects
from core.errors import LengthMismatchError, SequenceError
from core.sequence import (
    BinarySeq, Interval, alarmSets, checkSameLength, firstOneWithin, junctionRuns,
    onesWithin, runs, runsWithin,
)

def seq(text):
    return BinarySeq.fromString(text)

def bitTuples(n):
    return st.lists(st.integers(0, 1), min_size=n, max_size=n).map(tuple)

sequences = st.integers(1, 24).flatmap(bitTuples).map(BinarySeq)
pairs = st.integers(1, 24).flatmap(lambda n: st.tuples(bitTuples(n), bitTuples(n))).map(
    lambda bits: (BinarySeq(bits[0]), BinarySeq(bits[1])))

# Spacer for readability
# ------------------------------------------------------------------------------

class TestCoreModule(unittest.TestCase):
    """
    Test cases for the core module.
    """

    def test_fromStringIgnoresWhitespace(self):
        """
        Test that whitespace between characters is ignored.
        """
        self.assertEqual(seq(' 01 1\n0 '), seq('0110'))
        self.assertEqual(len(seq('0110')), 4)
        self.assertEqual(str(seq('0110')), '0110')

    def test_invalidSequences(self):
        """
        Test that empty strings and foreign characters are rejected.
        """
        for text in ('', '   ', '012', 'abc'):
            with self.assertRaises(SequenceError):
                seq(text)
        with self.assertRaises(SequenceError):
            BinarySeq(())

    def test_invalidInterval(self):
        """
        Test that intervals must satisfy 1 <= lo <= hi.
        """
        with self.assertRaises(SequenceError):
            Interval(0, 3)
        with self.assertRaises(SequenceError):
            Interval(4, 3)
        self.assertEqual(Interval(2, 5).length, 4)
        self.assertEqual(Interval(2, 5).intersection(Interval(4, 9)), Interval(4, 5))
        self.assertIsNone(Interval(2, 3).intersection(Interval(5, 6)))

    def test_atUsesOneBasedPositions(self):
        """
        Test that positions are 1-based.
        """
        s = seq('100')
        self.assertEqual(s.at(1), 1)
        self.assertEqual(s.at(3), 0)
        with self.assertRaises(SequenceError):
            s.at(0)

    def test_checkSameLength(self):
        """
        Test that a length mismatch raises with both lengths attached.
        """
        with self.assertRaises(LengthMismatchError) as ctx:
            checkSameLength(seq('0101'), seq('010'))
        self.assertEqual((ctx.exception.expected, ctx.exception.actual), (4, 3))

# Spacer for readability
# ------------------------------------------------------------------------------

    def test_runs(self):
        """
        Test maximal runs of ones and zeros.
        """
        g = seq('0110011')
        self.assertEqual(runs(g, 1), [Interval(2, 3), Interval(6, 7)])
        self.assertEqual(runs(g, 0), [Interval(1, 1), Interval(4, 5)])
        self.assertEqual(runs(seq('000'), 1), [])
        with self.assertRaises(SequenceError):
            runs(g, 2)

    def test_junctionRuns(self):
        """
        Test 0-1 and 1-0 junction runs.
        """
        g = seq('0110011')
        self.assertEqual(junctionRuns(g, 0, 1), [Interval(1, 3), Interval(4, 7)])
        self.assertEqual(junctionRuns(g, 1, 0), [Interval(2, 5)])
        self.assertEqual(junctionRuns(seq('1111'), 0, 1), [])
        with self.assertRaises(SequenceError):
            junctionRuns(g, 1, 1)

    def test_alarmSets(self):
        """
        Test that alarmSets bundles all four decompositions.
        """
        sets = alarmSets(seq('1001'))
        self.assertEqual(sets.ones, (Interval(1, 1), Interval(4, 4)))
        self.assertEqual(sets.zeros, (Interval(2, 3),))
        self.assertEqual(sets.junctions01, (Interval(2, 4),))
        self.assertEqual(sets.junctions10, (Interval(1, 3),))

    def test_windowHelpers(self):
        """
        Test counting and clipping inside a window.
        """
        p = seq('0111001100')
        window = Interval(3, 7)
        self.assertEqual(onesWithin(p, window), 3)
        self.assertEqual(runsWithin(p, window), [Interval(3, 4), Interval(7, 7)])
        self.assertEqual(runsWithin(p, window, value=0), [Interval(5, 6)])
        self.assertEqual(firstOneWithin(p, window), 3)
        self.assertIsNone(firstOneWithin(p, Interval(9, 10)))

# Spacer for readability
# ------------------------------------------------------------------------------

    def test_classifyAlarmsExample(self):
        """
        Test the four alarm classes on a two-anomaly example.
        """
        classes = classifyAlarms(seq('0110011'), seq('0011110'))
        self.assertEqual(classes.detected, frozenset({Interval(2, 3)}))
        self.assertEqual(classes.late, frozenset({Interval(3, 5)}))
        self.assertEqual(classes.early, frozenset({Interval(4, 6)}))
        self.assertEqual(classes.trueFalse, frozenset())

    def test_classifyTrueFalseAlarm(self):
        """
        Test that an alarm far from every anomaly is a true false alarm.
        """
        classes = classifyAlarms(seq('0001100000'), seq('1000000010'))
        self.assertEqual(classes.trueFalse, frozenset({Interval(1, 1), Interval(9, 9)}))
        self.assertEqual(classes.detected, frozenset())
        self.assertEqual(classes.early | classes.late, frozenset())

    def test_classifyEmptyAndPerfect(self):
        """
        Test the zero prediction and the perfect prediction.
        """
        g = seq('0011000111')
        empty = classifyAlarms(g, BinarySeq.zeros(len(g)))
        self.assertEqual(empty.detected | empty.trueFalse | empty.early | empty.late, frozenset())
        perfect = classifyAlarms(g, g)
        self.assertEqual(perfect.detected, frozenset(g.onesRuns))
        self.assertEqual(perfect.trueFalse | perfect.early | perfect.late, frozenset())

    def test_detectsFromBefore(self):
        """
        Test that an alarm starting in the preceding normal region detects the anomaly.
        """
        g = seq('000111')
        self.assertTrue(detects(g, Interval(2, 4), Interval(4, 6)))
        self.assertFalse(detects(g, Interval(1, 2), Interval(4, 6)))

# Spacer for readability
# ------------------------------------------------------------------------------

    @settings(max_examples=200, deadline=None)
    @given(sequences)
    def test_runsPartitionPositions(self, s):
        """
        Test that ones and zeros runs partition [n] into maximal runs.
        """
        covered = sorted(i for run in runs(s, 1) + runs(s, 0) for i in run.positions())
        self.assertEqual(covered, list(range(1, len(s) + 1)))
        ordered = sorted(runs(s, 1) + runs(s, 0))
        for left, right in zip(ordered, ordered[1:]):
            self.assertEqual(left.hi + 1, right.lo)
            self.assertNotEqual(s.at(left.lo), s.at(right.lo))

    @settings(max_examples=200, deadline=None)
    @given(sequences)
    def test_junctionStructure(self, s):
        """
        Test that every junction run is a u-run directly followed by a v-run.
        """
        for u, v in ((0, 1), (1, 0)):
            for junction in junctionRuns(s, u, v):
                parts = runsWithin(s, junction, value=u) + runsWithin(s, junction, value=v)
                self.assertEqual(len(parts), 2)
                self.assertEqual(s.at(junction.lo), u)
                self.assertEqual(s.at(junction.hi), v)
                self.assertIn(Interval(junction.lo, min(p.hi for p in parts)), runs(s, u))

    @settings(max_examples=300, deadline=None)
    @given(pairs)
    def test_classificationMembership(self, gp):
        """
        Test the membership rules of every alarm class.
        """
        g, p = gp
        classes = classifyAlarms(g, p)
        for anomaly in classes.detected:
            self.assertIn(anomaly, g.onesRuns)
        for alarm in classes.trueFalse:
            self.assertIn(alarm, p.onesRuns)
            self.assertEqual(onesWithin(g, alarm), 0)
        for family, junctions in ((classes.early, junctionRuns(g, 0, 1)), (classes.late, junctionRuns(g, 1, 0))):
            for alarm in family:
                self.assertTrue(any(alarm.isSubsetOf(j) for j in junctions))
                self.assertTrue(0 < onesWithin(g, alarm) < alarm.length)

    def test_classificationExhaustiveSmall(self):
        """
        Test that the zero prediction yields no alarm of any class for every g up to length 6.
        """
        for n in range(1, 7):
            for bits in product((0, 1), repeat=n):
                classes = classifyAlarms(BinarySeq(bits), BinarySeq.zeros(n))
                self.assertEqual(classes.detected | classes.trueFalse | classes.early | classes.late, frozenset())

# Spacer for readability
# ------------------------------------------------------------------------------

if __name__ == '__main__':
    unittest.main()
