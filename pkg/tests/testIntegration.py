# File: tests/testIntegration.py

"""
TsadLab/tests/testIntegration.py

Integration tests for the whole TsadLab workflow: sequence files on disk,
scoring through the command line, ranking a battery and checking properties.
"""

import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

import main
from cli.sequenceFiles import writeSequence
from core.sequence import BinarySeq, Interval
from metrics.catalog import CATALOG, scoreMetric
from rankings.synthetic import batteryPredictions

# Spacer for readability
# ------------------------------------------------------------------------------

class TestIntegration(unittest.TestCase):
    """
    Integration test cases for TsadLab.
    """

    def setUp(self):
        """
        Set up a ground truth and a directory of battery predictions on disk.
        """
        self.tempDir = tempfile.mkdtemp()
        self.configDir = os.path.join(self.tempDir, 'config')
        self.g = BinarySeq.fromIntervals(80, [Interval(11, 18), Interval(41, 45), Interval(66, 70)])
        self.gtPath = os.path.join(self.tempDir, 'gt.json')
        writeSequence(self.g, self.gtPath)
        self.predDir = os.path.join(self.tempDir, 'preds')
        os.makedirs(self.predDir)
        self.predictions = batteryPredictions(self.g)
        extensions = ('.txt', '.csv', '.json')
        for index, (pid, prediction) in enumerate(self.predictions):
            writeSequence(prediction, os.path.join(self.predDir, pid + extensions[index % 3]))

    def tearDown(self):
        """
        Clean up the temporary directory after tests.
        """
        shutil.rmtree(self.tempDir)

    def runCli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with patch('main.setupLoggingModule'), contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main.main(['--config-dir', self.configDir, *argv])
        return code, out.getvalue(), err.getvalue()

    def test_scoreEveryMetric(self):
        """
        Test that the command line reproduces the library score of every catalog metric.
        """
        perfect = os.path.join(self.predDir, 'perfect.txt')
        self.assertTrue(os.path.isfile(perfect))
        for metricId in CATALOG:
            code, out, err = self.runCli('score', '--metric', metricId, '--gt', self.gtPath, '--pred', perfect)
            self.assertEqual(code, 0, f"{metricId}: {err}")
            expected = scoreMetric(metricId, self.g, self.g).value
            self.assertAlmostEqual(json.loads(out)['score'], float(expected), places=9, msg=metricId)

    def test_rankDirectoryMatchesBattery(self):
        """
        Test that ranking files from disk equals ranking the generated battery.
        """
        fromDisk = os.path.join(self.tempDir, 'disk')
        generated = os.path.join(self.tempDir, 'generated')
        metrics = 'pointwise-f1,pa-f1,affiliation-f1,larm,alarm'
        code, _, err = self.runCli('rank', '--metrics', metrics, '--gt', self.gtPath,
                                   '--preds', self.predDir, '--out', fromDisk)
        self.assertEqual(code, 0, err)
        code, _, err = self.runCli('rank', '--metrics', metrics, '--gt', self.gtPath,
                                   '--battery', 'default16', '--out', generated)
        self.assertEqual(code, 0, err)
        for name in ('pointwise-f1.csv', 'larm.csv', 'tau.csv'):
            with open(os.path.join(fromDisk, name)) as a, open(os.path.join(generated, name)) as b:
                self.assertEqual(a.read(), b.read(), name)

    def test_rankWithWorkers(self):
        """
        Test that worker processes produce the same tau matrix.
        """
        args = ('rank', '--metrics', 'pointwise-f1,event-f1,larm', '--gt', self.gtPath, '--battery', 'default16')
        code, serial, _ = self.runCli(*args, '--workers', '1')
        self.assertEqual(code, 0)
        code, parallel, _ = self.runCli(*args, '--workers', '2')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(serial)['tau'], json.loads(parallel)['tau'])

    def test_propcheckAlarm(self):
        """
        Test a small advanced-property run on ALARM, disputed cells included.
        """
        code, out, err = self.runCli('propcheck', '--metric', 'alarm', '--properties', 'A1,A7', '--max-len', '3')
        self.assertEqual(code, 0, err)
        cells = {cell['property']: cell for cell in json.loads(out)['cells']}
        self.assertEqual(cells['A1']['expected'], 'satisfied')
        self.assertFalse(cells['A1']['mismatch'])
        self.assertEqual(cells['A7']['expected'], 'disputed')
        self.assertEqual(cells['A7']['verdict'], 'violated')
        self.assertIn('disputeNote', cells['A7'])

# Spacer for readability
# ------------------------------------------------------------------------------

if __name__ == '__main__':
    unittest.main()
