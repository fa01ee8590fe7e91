# File: tests/testLarm.py

"""
TsadLab/tests/testLarm.py

Unit tests for the alignment-and-accuracy metrics LARM and ALARM.
"""

import unittest
from fractions import Fraction
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import ParameterError
from core.sequence import BinarySeq
from metrics.catalog import scoreMetric
from metrics.descriptor import UNDEFINED
from metrics.larm import (
    DEFAULT_CONFIG, LarmConfig, alarm, checkLarmConfig, dyadicAlignment, larm,
    saturatingPenalty, scoreAlarm, scoreLarm,
)

F = Fraction

def seq(text):
    return BinarySeq.fromString(text)

def flatAlignment(bits):
    return F(sum(bits), len(bits) + 1)

def linearAlignment(bits):
    m = len(bits)
    return sum((F(m - j, m * (m + 1)) for j, bit in enumerate(bits) if bit), F(0)) * F(2, 3)

withAnomaly = st.integers(1, 64).flatmap(
    lambda n: st.lists(st.integers(0, 1), min_size=n, max_size=n)).filter(lambda bits: 1 in bits)

# Spacer for readability
# ------------------------------------------------------------------------------

class TestLarmModule(unittest.TestCase):
    """
    Test cases for LARM and ALARM.
    """

    def test_defaultFunctions(self):
        """
        Test the dyadic alignment and the saturating penalty.
        """
        self.assertEqual(dyadicAlignment((1, 1)), F(3, 4))
        self.assertEqual(dyadicAlignment((0, 1, 1)), F(3, 8))
        self.assertEqual(dyadicAlignment((0, 0)), 0)
        self.assertEqual(saturatingPenalty(0), 0)
        self.assertEqual(saturatingPenalty(1), 0)
        self.assertEqual(saturatingPenalty(4), F(3, 4))

    def test_larmValues(self):
        """
        Test LARM on a perfect prediction and with a false alarm.
        """
        self.assertEqual(larm(seq('0110'), seq('0110')), F(7, 8))
        self.assertEqual(larm(seq('011000'), seq('010010')), F(-5, 4))
        self.assertEqual(scoreMetric('larm', seq('011000'), seq('000000')).value, 0)

    def test_larmUndefinedWithoutAnomaly(self):
        """
        Test that LARM is undefined when g has no anomaly.
        """
        self.assertIs(larm(seq('0000'), seq('0100')), UNDEFINED)

    def test_larmPrefersEarlyCompactAlarms(self):
        """
        Test that earlier and fewer alarms inside a window score higher.
        """
        g = seq('0111100')
        self.assertGreater(larm(g, seq('0100000')), larm(g, seq('0010000')))
        self.assertGreater(larm(g, seq('0110000')), larm(g, seq('0101000')))

    def test_alarmValues(self):
        """
        Test ALARM on a perfect prediction and on a true false alarm.
        """
        self.assertEqual(alarm(seq('0110'), seq('0110')), F(15, 8))
        self.assertEqual(alarm(seq('011000'), seq('000010')), F(-1, 2))
        self.assertEqual(alarm(seq('011000'), seq('000010'), t=1), -1)

    def test_alarmTolerance(self):
        """
        Test that t must be a positive integer.
        """
        with self.assertRaises(ParameterError):
            alarm(seq('01'), seq('01'), t=0)
        with self.assertRaises(ParameterError):
            scoreMetric('alarm', seq('01'), seq('01'), t=0)

    def test_alarmGradesEarlyAndLateAlarms(self):
        """
        Test that a late alarm costs less than an early alarm.
        """
        g = seq('0011100')
        self.assertEqual(alarm(g, seq('0000110')), F(21, 16))
        self.assertEqual(alarm(g, seq('0110000')), 1)

# Spacer for readability
# ------------------------------------------------------------------------------

    def test_defaultConfigPassesChecks(self):
        """
        Test that the default alpha and beta meet the monotonicity requirements.
        """
        self.assertEqual(checkLarmConfig(DEFAULT_CONFIG, maxWindow=6, maxCount=200), [])
        self.assertTrue(DEFAULT_CONFIG.isDefault)

    def test_checkLarmConfigFlagsProblems(self):
        """
        Test that an alignment without early bias and a bad penalty are reported.
        """
        problems = checkLarmConfig(LarmConfig(alphaFn=flatAlignment), maxWindow=4, maxCount=10)
        self.assertTrue(any('early-biased' in problem for problem in problems))
        problems = checkLarmConfig(LarmConfig(betaFn=lambda count: F(1, count + 1)), maxWindow=2, maxCount=5)
        self.assertTrue(any('beta(0)' in problem for problem in problems))
        self.assertTrue(checkLarmConfig(LarmConfig(t=0), maxWindow=1, maxCount=1))

    def test_customConfig(self):
        """
        Test that a custom alignment function is used and noted on the result.
        """
        config = LarmConfig(alphaFn=linearAlignment)
        self.assertEqual(checkLarmConfig(config, maxWindow=5, maxCount=10), [])
        g, p = seq('0110'), seq('0110')
        result = scoreLarm(config, g, p)
        self.assertEqual(result.value, (linearAlignment((1, 1)) + 1) / 2)
        self.assertEqual(result.notes, 'custom alpha/beta')
        self.assertEqual(scoreLarm(None, g, p).notes, '')
        self.assertEqual(scoreAlarm(LarmConfig(t=1), g, p).metric.paramDict, {'t': 1})

# Spacer for readability
# ------------------------------------------------------------------------------

    @settings(max_examples=300, deadline=None)
    @given(withAnomaly)
    def test_zeroPredictionScoresZero(self, bits):
        """
        Test that the all-zero prediction scores exactly 0 under LARM and ALARM.
        """
        g = BinarySeq(tuple(bits))
        zeros = BinarySeq.zeros(len(g))
        self.assertEqual(larm(g, zeros), 0)
        self.assertEqual(alarm(g, zeros), 0)

    def test_zeroPredictionExhaustive(self):
        """
        Test the zero anchor for every ground truth up to length 8.
        """
        for n in range(1, 9):
            for bits in product((0, 1), repeat=n):
                if 1 not in bits:
                    continue
                g = BinarySeq(bits)
                self.assertEqual(larm(g, BinarySeq.zeros(n)), 0)
                self.assertEqual(alarm(g, BinarySeq.zeros(n)), 0)

    @settings(max_examples=200, deadline=None)
    @given(withAnomaly)
    def test_perfectPredictionIsPositive(self, bits):
        """
        Test that the ground truth itself scores in (0, 1) under LARM.
        """
        g = BinarySeq(tuple(bits))
        value = larm(g, g)
        self.assertTrue(0 < value < 1)
        self.assertGreater(alarm(g, g), len(g.onesRuns))

# Spacer for readability
# ------------------------------------------------------------------------------

if __name__ == '__main__':
    unittest.main()
