# File: metrics/larm.py

"""
TsadLab/metrics/larm.py

The alignment-and-accuracy metrics LARM and ALARM.

LARM rewards each hit anomaly window by how early and how compactly it is
covered and penalises every alarm and false-positive point in normal regions.
ALARM counts detected anomalies first and grades the remaining alarms by
whether they are true false alarms, early alarms or late alarms.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
import logging

from core.alarms import classifyAlarms
from core.errors import ParameterError
from core.sequence import checkSameLength, onesWithin, runsWithin
from metrics.descriptor import UNDEFINED
from metrics.overlap import falsePositives

# Spacer for readability
# ------------------------------------------------------------------------------

def dyadicAlignment(bits):
    """
    Default alpha: sum of 2^-j over the 1-based in-window positions j holding a 1.

    Args:
        bits (tuple): The prediction restricted to the anomaly window.

    Returns:
        Fraction: A value in [0, 1).
    """
    return sum((Fraction(1, 2 ** j) for j, bit in enumerate(bits, start=1) if bit), Fraction(0))

def saturatingPenalty(count):
    """
    Default beta: 0 for no false positives, else 1 - 1/count.
    """
    if count == 0:
        return Fraction(0)
    return 1 - Fraction(1, count)

@dataclass(frozen=True)
class LarmConfig:
    """
    Alignment function, false-positive penalty and alarm tolerance.

    The defaults are module-level functions so that a config can be sent to
    worker processes.
    """
    alphaFn: object = field(default=dyadicAlignment)
    betaFn: object = field(default=saturatingPenalty)
    t: int = 2

    @property
    def isDefault(self):
        return self.alphaFn is dyadicAlignment and self.betaFn is saturatingPenalty

DEFAULT_CONFIG = LarmConfig()

# Spacer for readability
# ------------------------------------------------------------------------------

def checkLarmConfig(config, maxWindow=8, maxCount=1000):
    """
    Spot-checks the monotonicity requirements of a LarmConfig.

    alpha is checked exhaustively over windows up to maxWindow long, beta over
    counts 0..maxCount.

    Args:
        config (LarmConfig): The configuration to check.
        maxWindow (int): Largest window length to enumerate.
        maxCount (int): Largest false-positive count to evaluate.

    Returns:
        list: Human-readable problems; empty when none were found.
    """
    problems = []
    if not isinstance(config.t, int) or config.t < 1:
        problems.append(f"t must be a positive integer, got {config.t}")

    for length in range(1, maxWindow + 1):
        for bits in product((0, 1), repeat=length):
            value = config.alphaFn(bits)
            if not 0 <= value < 1:
                problems.append(f"alpha{bits} = {value} outside [0, 1)")
            for j, bit in enumerate(bits):
                if bit:
                    continue
                added = bits[:j] + (1,) + bits[j + 1:]
                if not config.alphaFn(added) > value:
                    problems.append(f"alpha does not increase from {bits} to {added}")
                if j + 1 < length and bits[j + 1]:
                    moved = bits[:j] + (1, 0) + bits[j + 2:]
                    if not config.alphaFn(moved) > value:
                        problems.append(f"alpha is not early-biased from {bits} to {moved}")
        if len(problems) > 20:
            break

    previous = config.betaFn(0)
    if previous != 0:
        problems.append(f"beta(0) = {previous}, expected 0")
    for count in range(1, maxCount + 1):
        value = config.betaFn(count)
        if value < previous or not 0 <= value <= 1:
            problems.append(f"beta({count}) = {value} breaks monotonicity or leaves [0, 1]")
            break
        previous = value

    if problems:
        logging.warning(f"LARM configuration has {len(problems)} problem(s).")
    return problems

# Spacer for readability
# ------------------------------------------------------------------------------

def _windowBits(p, window):
    return p.bits[window.lo - 1:window.hi]

def _alignmentCredit(config, p, window):
    """
    (alpha(p_A) + 1) / 2^(number of alarms of p inside A).
    """
    alarms = len(runsWithin(p, window))
    return (config.alphaFn(_windowBits(p, window)) + 1) / Fraction(2 ** alarms)

def larm(g, p, config=None):
    """
    LARM score of prediction p; undefined when g has no anomaly.

    Args:
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction.
        config (LarmConfig): Alignment and penalty functions; defaults apply when None.

    Returns:
        Fraction | float | Undefined: The score.
    """
    checkSameLength(g, p)
    config = config or DEFAULT_CONFIG
    anomalies = g.onesRuns
    if not anomalies:
        return UNDEFINED
    credit = sum((_alignmentCredit(config, p, a) for a in anomalies if onesWithin(p, a) > 0), Fraction(0))
    penalty = 0
    for normal in g.zerosRuns:
        penalty += 2 * len(runsWithin(p, normal)) + config.betaFn(onesWithin(p, normal))
    return credit / len(anomalies) - penalty

def alarm(g, p, t=2, config=None):
    """
    ALARM score of prediction p with alarm tolerance t.

    The averaged alignment term is 0 when no anomaly is detected.
    """
    checkSameLength(g, p)
    config = config or DEFAULT_CONFIG
    if not isinstance(t, int) or t < 1:
        raise ParameterError(f"alarm tolerance t must be a positive integer, got {t}")
    classes = classifyAlarms(g, p)
    detected = classes.detected
    alignment = Fraction(0)
    if detected:
        alignment = sum((_alignmentCredit(config, p, a) for a in detected), Fraction(0)) / len(detected)
    misplaced = len(classes.trueFalse) + Fraction(3, 2) * len(classes.early) + Fraction(1, 2) * len(classes.late)
    return len(detected) + alignment - config.betaFn(falsePositives(g, p)) - misplaced / t

# Spacer for readability
# ------------------------------------------------------------------------------

def scoreLarm(config, g, p):
    """
    Scores LARM as a ScoreResult; a non-default config is noted on the result.
    """
    from metrics.catalog import describe
    from metrics.descriptor import ScoreResult
    config = config or DEFAULT_CONFIG
    notes = '' if config.isDefault else 'custom alpha/beta'
    return ScoreResult(larm(g, p, config), describe('larm'), notes)

def scoreAlarm(config, g, p):
    from metrics.catalog import describe
    from metrics.descriptor import ScoreResult
    config = config or DEFAULT_CONFIG
    notes = '' if config.isDefault else 'custom alpha/beta'
    return ScoreResult(alarm(g, p, config.t, config), describe('alarm', t=config.t), notes)
