# File: tests/testMetrics.py

"""
TsadLab/tests/testMetrics.py

Unit tests for the point-wise, point-adjusted, event-wise, k-delay, NAB,
time-tolerant, time-aware, affiliation and distance metrics, and for the
catalog and descriptor plumbing.
"""

import math
import unittest
from fractions import Fraction

from core.errors import LengthMismatchError, ParameterError, UnknownMetricError
from core.sequence import BinarySeq
from metrics.catalog import CATALOG, describe, getEntry, listCatalog, scoreMetric
from metrics.descriptor import UNDEFINED, harmonicMean, isUndefined, ratio
from metrics.pointwise import scorePointwise
from metrics.eventWise import scoreEventWise
from metrics.nab import nabRaw, scaledSigmoid, scoreNab

F = Fraction

def seq(text):
    return BinarySeq.fromString(text)

def score(metric, g, p, **params):
    return scoreMetric(metric, seq(g), seq(p), **params).value

# Spacer for readability
# ------------------------------------------------------------------------------

class TestMetricsModule(unittest.TestCase):
    """
    Test cases for the metric families and the catalog.
    """

    def test_pointwise(self):
        """
        Test point-wise precision, recall and F1.
        """
        g, p = '000111111000', '000111000000'
        self.assertEqual(score('pointwise-precision', g, p), 1)
        self.assertEqual(score('pointwise-recall', g, p), F(1, 2))
        self.assertEqual(score('pointwise-f1', g, p), F(2, 3))
        self.assertEqual(scorePointwise('f1', seq(g), seq(p)).value, F(2, 3))

    def test_pointwiseUndefined(self):
        """
        Test the empty-denominator convention.
        """
        self.assertIs(score('pointwise-precision', '0110', '0000'), UNDEFINED)
        self.assertIs(score('pointwise-f1', '0000', '0000'), UNDEFINED)
        self.assertEqual(score('pointwise-f1', '0110', '0000'), 0)

    def test_pointAdjusted(self):
        """
        Test that one hit adjusts the whole window and false positives still count.
        """
        self.assertEqual(score('pa-f1', '000111111000', '000100000000'), 1)
        g, p = '000000111000', '011100010000'
        self.assertEqual(score('pa-precision', g, p), F(1, 2))
        self.assertEqual(score('pa-recall', g, p), 1)
        self.assertEqual(score('pa-f1', g, p), F(2, 3))

    def test_eventWise(self):
        """
        Test event-wise counts of windows and false alarms.
        """
        g, p = '000111111000', '110111000000'
        self.assertEqual(score('event-precision', g, p), F(1, 2))
        self.assertEqual(score('event-recall', g, p), 1)
        self.assertEqual(score('event-f1', g, p), F(2, 3))
        self.assertEqual(scoreEventWise('composite_f1', seq(g), seq('000111011000')).value, 1)

    def test_kDelay(self):
        """
        Test that only windows hit within k steps of their start are adjusted.
        """
        g, p = '000111011000', '000000011000'
        self.assertEqual(score('kdelay-f1', g, p), F(4, 7))
        self.assertEqual(score('kdelay-recall', g, p), F(2, 5))
        self.assertEqual(score('kdelay-recall', g, '000001011000', k=1), F(2, 5))
        self.assertEqual(score('kdelay-recall', g, '000001011000', k=2), 1)

# Spacer for readability
# ------------------------------------------------------------------------------

    def test_nabRaw(self):
        """
        Test the raw NAB score of a missed window followed by a false positive.
        """
        value = score('nab-raw', '000110000000', '000001000000')
        expected = -1 + 0.11 * (2 / (1 + math.exp(5)) - 1)
        self.assertAlmostEqual(value, expected, places=12)

    def test_scaledSigmoid(self):
        """
        Test the sigmoid shape and that it does not overflow.
        """
        self.assertAlmostEqual(scaledSigmoid(0), 0.0, places=12)
        self.assertAlmostEqual(scaledSigmoid(-1), 2 / (1 + math.exp(-5)) - 1, places=12)
        self.assertAlmostEqual(scaledSigmoid(1000), -1.0, places=12)

    def test_nabNormalized(self):
        """
        Test that the perfect prediction scores 100 and the empty one 0.
        """
        g = seq('000110000000')
        self.assertAlmostEqual(scoreNab(1, '0.11', -1, g, g).value, 100.0, places=9)
        self.assertAlmostEqual(scoreNab(1, '0.11', -1, g, BinarySeq.zeros(12)).value, 0.0, places=9)
        self.assertIs(score('nab', '000000', '010000'), UNDEFINED)

    def test_nabFalsePositiveBeforeFirstAnomaly(self):
        """
        Test the flat penalty for false positives before any anomaly.
        """
        g = seq('000011')
        self.assertAlmostEqual(nabRaw(g, seq('100011')) - nabRaw(g, g), -0.11, places=12)

    def test_timeTolerant(self):
        """
        Test tolerance windows of precision and recall.
        """
        self.assertEqual(score('tolerant-precision', '000000110000', '000001010000'), 1)
        self.assertEqual(score('tolerant-precision', '000000110000', '000010010000'), F(1, 2))
        self.assertEqual(score('tolerant-precision', '000000110000', '000001010000', delta=0), F(1, 2))
        self.assertEqual(score('tolerant-recall', '000000111000', '000010001000'), F(2, 3))

    def test_distances(self):
        """
        Test negated temporal distance and average alert delay.
        """
        g = '000111111000'
        self.assertEqual(score('temporal-distance', g, '000111000000'), -6)
        self.assertEqual(score('temporal-distance', g, '000111011000'), -1)
        self.assertEqual(score('temporal-distance', g, '000000000000'), float('-inf'))
        self.assertEqual(score('average-alert-delay', g, '000010000000'), -1)
        self.assertIs(score('average-alert-delay', g, '000000000000'), UNDEFINED)

    def test_affiliation(self):
        """
        Test affiliation precision, recall and F1 on a single window.
        """
        g, p = '000000111000', '010000100000'
        self.assertEqual(score('affiliation-precision', g, p), F(5, 12))
        self.assertEqual(score('affiliation-recall', g, p), F(5, 6))
        self.assertEqual(score('affiliation-f1', g, p), F(5, 9))
        self.assertEqual(score('affiliation-recall', '000000110000', '000000000000'), float('-inf'))
        self.assertIs(score('affiliation-precision', g, '000000000000'), UNDEFINED)

    def test_timeAware(self):
        """
        Test TaP and TaR with the default tail of one step.
        """
        g = '000111000000'
        self.assertEqual(score('tap', g, '000011100000'), 1)
        self.assertEqual(score('tar', g, '000011100000'), 1)
        self.assertEqual(score('tar', g, '000100000000'), F(1, 6))
        self.assertEqual(score('tap', g, '000100000000'), 1)
        self.assertIs(score('tap', g, '000000000000'), UNDEFINED)
        self.assertIsInstance(score('tap', g, '000011100000', delta=3), float)

    def test_enhancedTimeAware(self):
        """
        Test that eTaP and eTaR drop insufficiently covered windows.
        """
        g = '000111000000'
        self.assertAlmostEqual(score('etap', g, g), 1.0, places=12)
        self.assertEqual(score('etar', g, g), 1)
        self.assertEqual(score('etar', g, '000100000000'), 0)
        self.assertAlmostEqual(score('etap', g, '000100000000'), 0.0, places=12)

# Spacer for readability
# ------------------------------------------------------------------------------

    def test_catalogSize(self):
        """
        Test that the catalog holds every implemented metric.
        """
        self.assertEqual(len(CATALOG), 40)
        self.assertEqual([entry.id for entry in listCatalog()], list(CATALOG))
        self.assertIn('larm', CATALOG)
        self.assertIn('alarm', CATALOG)

    def test_describeDefaults(self):
        """
        Test that descriptors carry every default parameter.
        """
        self.assertEqual(describe('nab').paramDict, {'aTP': 1, 'aFP': F(11, 100), 'aFN': -1})
        self.assertEqual(describe('alarm').paramDict, {'t': 2})
        self.assertEqual(describe('pointwise-f1').params, ())
        self.assertEqual(describe('pa-decay', d='0.9').label(), 'pa-decay(d=0.9)')

    def test_describeRejectsBadParams(self):
        """
        Test unknown parameters, out-of-range values and non-integers.
        """
        with self.assertRaises(ParameterError):
            describe('pointwise-f1', k=1)
        with self.assertRaises(ParameterError):
            describe('pa-decay', d='0')
        with self.assertRaises(ParameterError):
            describe('pa-percent-k', kPercent='3/2')
        with self.assertRaises(ParameterError):
            describe('kdelay-f1', k='1.5')
        with self.assertRaises(ParameterError):
            describe('nab', aFN='abc')

    def test_unknownMetric(self):
        """
        Test that unknown ids raise a KeyError subclass with a readable message.
        """
        with self.assertRaises(UnknownMetricError) as ctx:
            getEntry('no-such-metric')
        self.assertIsInstance(ctx.exception, KeyError)
        self.assertEqual(str(ctx.exception), "unknown metric 'no-such-metric'")

    def test_lengthMismatch(self):
        """
        Test that scoring sequences of different length raises.
        """
        with self.assertRaises(LengthMismatchError):
            score('pointwise-f1', '0110', '011')

    def test_exactDecimalParameter(self):
        """
        Test that decimal parameters are read as exact rationals.
        """
        result = scoreMetric('pa-decay', seq('1111111111'), seq('0000000001'), d='0.9')
        self.assertEqual(result.value, F(9, 10) ** 9)
        self.assertEqual(result.exact, F(9, 10) ** 9)

    def test_scoreResult(self):
        """
        Test the ScoreResult helpers for rational, float and undefined values.
        """
        defined = scoreMetric('pointwise-f1', seq('0110'), seq('0100'))
        self.assertTrue(defined.isDefined)
        self.assertAlmostEqual(defined.asFloat(), 2 / 3)
        undefined = scoreMetric('pointwise-precision', seq('0110'), seq('0000'))
        self.assertFalse(undefined.isDefined)
        self.assertIsNone(undefined.asFloat())
        self.assertIsNone(scoreMetric('nab-raw', seq('0110'), seq('0100')).exact)

    def test_ratioAndHarmonicMean(self):
        """
        Test the arithmetic helpers shared by the metrics.
        """
        self.assertIs(ratio(1, 0), UNDEFINED)
        self.assertEqual(ratio(1, 3), F(1, 3))
        self.assertEqual(harmonicMean(F(0), F(0)), 0)
        self.assertTrue(isUndefined(harmonicMean(UNDEFINED, F(1))))
        self.assertTrue(isUndefined(harmonicMean(float('-inf'), F(1))))
        self.assertEqual(harmonicMean(F(1, 2), F(1)), F(2, 3))

    def test_familyDispatchRejectsUnknownKind(self):
        """
        Test that family-level helpers reject unknown kinds.
        """
        with self.assertRaises(ParameterError):
            scorePointwise('accuracy', seq('01'), seq('01'))

# Spacer for readability
# ------------------------------------------------------------------------------

if __name__ == '__main__':
    unittest.main()
