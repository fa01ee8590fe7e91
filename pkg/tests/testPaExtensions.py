# File: tests/testPaExtensions.py

"""
TsadLab/tests/testPaExtensions.py

Unit tests for the point-adjusted refinements: PA%K and its integral, PA
with decay, reduced-length F1, balanced PA and the latency- and
sparsity-aware F1.
"""

import math
import unittest
from fractions import Fraction

from core.errors import ParameterError
from core.sequence import BinarySeq
from metrics.catalog import scoreMetric
from metrics.paExtensions import paDecay, paPercentK, paPercentKIntegrated, scorePaExtension

F = Fraction

def seq(text):
    return BinarySeq.fromString(text)

def score(metric, g, p, **params):
    return scoreMetric(metric, seq(g), seq(p), **params).value

# Spacer for readability
# ------------------------------------------------------------------------------

class TestPaExtensionsModule(unittest.TestCase):
    """
    Test cases for the point-adjusted refinements.
    """

    def test_paPercentKThreshold(self):
        """
        Test that a window is adjusted only above the K share.
        """
        g = '000000111000'
        self.assertEqual(score('pa-percent-k', g, '000000100000'), F(1, 2))
        self.assertEqual(score('pa-percent-k', g, '000010111000'), F(6, 7))
        self.assertEqual(score('pa-percent-k', g, '000000100000', kPercent=0), 1)
        self.assertEqual(score('pa-percent-k', g, '000000110000', kPercent=F(2, 3)), F(4, 5))

    def test_paPercentKMatchesPointwiseAtOne(self):
        """
        Test that K = 1 never adjusts and reduces to point-wise F1.
        """
        g, p = seq('000111111000'), seq('010111000000')
        self.assertEqual(paPercentK(g, p, F(1)), scoreMetric('pointwise-f1', g, p).value)

    def test_paPercentKIntegrated(self):
        """
        Test the exact integral over K of a single partially hit window.
        """
        self.assertEqual(paPercentKIntegrated(seq('000000111000'), seq('000000100000')), F(2, 3))
        self.assertEqual(paPercentKIntegrated(seq('000111'), seq('000111')), 1)
        self.assertEqual(paPercentKIntegrated(seq('000111'), seq('100000')), 0)

    def test_paDecay(self):
        """
        Test the decayed credit of late detections.
        """
        g = seq('1111111111')
        self.assertEqual(paDecay(g, seq('1000000000')), 1)
        self.assertEqual(paDecay(g, seq('0100000000')), F(1, 2))
        self.assertEqual(paDecay(g, seq('0000000001'), F(9, 10)), F(9, 10) ** 9)
        self.assertEqual(paDecay(g, seq('0000000001'), F(1)), 1)
        self.assertEqual(score('pa-decay', '101111111111', '100000000001'), F(261, 2816))
        self.assertEqual(score('pa-decay', '101111111111', '100000000000'), F(1, 6))

    def test_paDecayRange(self):
        """
        Test that d must lie in (0, 1].
        """
        with self.assertRaises(ParameterError):
            score('pa-decay', '01', '01', d=0)
        with self.assertRaises(ParameterError):
            score('pa-decay', '01', '01', d='1.1')

    def test_reducedLengthF1(self):
        """
        Test the logarithmic window weights.
        """
        value = score('reduced-length-f1', '000000111000', '001100010000')
        self.assertAlmostEqual(value, math.log(3) / (1 + math.log(3)), places=12)
        self.assertAlmostEqual(score('reduced-length-f1', '000000111000', '000000010000'), 1.0, places=12)

    def test_balancedPaF1(self):
        """
        Test that neighbours of a false positive are counted.
        """
        self.assertEqual(score('balanced-pa-f1', '000001000111', '000000000010'), F(6, 7))
        self.assertEqual(score('balanced-pa-f1', '000000100000', '000010000000'), 0)
        self.assertEqual(score('balanced-pa-f1', '000000100000', '000011000000'), F(2, 5))
        self.assertEqual(score('balanced-pa-f1', '000000100000', '000000100000', B=0), 1)

    def test_lsaF1(self):
        """
        Test the block-wise latency- and sparsity-aware F1.
        """
        self.assertEqual(score('lsa-f1', '111111000000', '000100000000'), F(2, 3))
        self.assertEqual(score('lsa-f1', '100000000000', '101000000000'), 1)
        self.assertEqual(score('lsa-f1', '100000000000', '100100000000'), F(2, 3))
        self.assertEqual(score('lsa-f1', '100000000000', '010000000000', b=2), 1)
        self.assertEqual(score('lsa-f1', '100000000000', '010000000000', b=1), 0)

    def test_familyDispatch(self):
        """
        Test the family-level helper with and without parameters.
        """
        g, p = seq('000000111000'), seq('000000100000')
        self.assertEqual(scorePaExtension('pa_percent_k', None, g, p).value, F(1, 2))
        self.assertEqual(scorePaExtension('pa_percent_k', {'kPercent': 0}, g, p).value, 1)
        with self.assertRaises(ParameterError):
            scorePaExtension('pa_magic', None, g, p)

# Spacer for readability
# ------------------------------------------------------------------------------

if __name__ == '__main__':
    unittest.main()
