# File: rankings/synthetic.py

"""
TsadLab/rankings/synthetic.py

Synthetic prediction families derived from a ground truth, and the default
battery of sixteen of them used to compare metric rankings.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from core.errors import ParameterError
from core.sequence import BinarySeq, Interval

DEFAULT_SEED = 7

KINDS = (
    'perfect', 'empty', 'inverted', 'delayed', 'truncated', 'oscillating',
    'random', 'shifted', 'merged', 'extra-false-alarms',
)

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class SyntheticSpec:
    """
    A prediction family with its parameters.

    delayed(d), truncated(fraction), oscillating(period), random(rate, seed),
    shifted(offset) and extra-false-alarms(count, seed) take parameters; the
    other kinds take none.
    """
    kind: str
    d: int = 0
    fraction: Fraction = Fraction(1)
    period: int = 2
    rate: Fraction = Fraction(1, 10)
    offset: int = 0
    count: int = 1
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown synthetic kind '{self.kind}', expected one of {', '.join(KINDS)}")
        if self.d < 0:
            raise ParameterError(f"delay must be >= 0, got {self.d}")
        if not 0 < self.fraction <= 1:
            raise ParameterError(f"fraction must lie in (0, 1], got {self.fraction}")
        if self.period < 2:
            raise ParameterError(f"period must be >= 2, got {self.period}")
        if not 0 <= self.rate <= 1:
            raise ParameterError(f"rate must lie in [0, 1], got {self.rate}")
        if self.count < 0:
            raise ParameterError(f"count must be >= 0, got {self.count}")

    @property
    def label(self):
        """
        Stable prediction id, e.g. 'delayed-3', 'shifted+2' or 'random-0.1-s7'.
        """
        if self.kind == 'delayed':
            return f"delayed-{self.d}"
        if self.kind == 'truncated':
            return f"truncated-{float(self.fraction):g}"
        if self.kind == 'oscillating':
            return f"oscillating-{self.period}"
        if self.kind == 'random':
            return f"random-{float(self.rate):g}-s{self.seed}"
        if self.kind == 'shifted':
            return f"shifted{self.offset:+d}"
        if self.kind == 'extra-false-alarms':
            return f"extra-false-alarms-{self.count}-s{self.seed}"
        return self.kind

# Spacer for readability
# ------------------------------------------------------------------------------

def _fromMask(mask):
    return BinarySeq(tuple(int(b) for b in mask))

def _perWindow(g, keep):
    """
    Ones exactly where keep(window, position) holds, for positions inside windows.
    """
    bits = [0] * len(g)
    for window in g.onesRuns:
        for i in window.positions():
            if keep(window, i):
                bits[i - 1] = 1
    return BinarySeq(tuple(bits))

def generateSynthetic(spec, g):
    """
    Builds the prediction of one family for a ground truth.

    Args:
        spec (SyntheticSpec): The family.
        g (BinarySeq): Ground truth.

    Returns:
        BinarySeq: The prediction, deterministic in (spec, g).

    Raises:
        ParameterError: The spec does not fit the length of g.
    """
    n = len(g)
    kind = spec.kind
    if kind == 'perfect':
        return g
    if kind == 'empty':
        return BinarySeq.zeros(n)
    if kind == 'inverted':
        return _fromMask(1 - g.array)
    if kind == 'delayed':
        return _perWindow(g, lambda w, i: i >= w.lo + spec.d)
    if kind == 'truncated':
        return _perWindow(g, lambda w, i: i < w.lo + math.ceil(spec.fraction * w.length))
    if kind == 'oscillating':
        return _perWindow(g, lambda w, i: (i - w.lo) % spec.period == 0)
    if kind == 'random':
        rng = np.random.default_rng(spec.seed)
        return _fromMask(rng.random(n) < float(spec.rate))
    if kind == 'shifted':
        if abs(spec.offset) >= n:
            raise ParameterError(f"offset {spec.offset} does not fit length {n}")
        bits = [0] * n
        for i in g.onePositions:
            target = i + spec.offset
            if 1 <= target <= n:
                bits[target - 1] = 1
        return BinarySeq(tuple(bits))
    if kind == 'merged':
        windows = g.onesRuns
        if not windows:
            return BinarySeq.zeros(n)
        return BinarySeq.fromIntervals(n, [Interval(windows[0].lo, windows[-1].hi)])
    # extra-false-alarms
    normal = np.flatnonzero(g.array == 0)
    if spec.count > normal.size:
        raise ParameterError(f"cannot place {spec.count} false alarms in {normal.size} normal steps")
    rng = np.random.default_rng(spec.seed)
    chosen = rng.choice(normal, size=spec.count, replace=False)
    mask = g.array.copy()
    mask[chosen] = 1
    return _fromMask(mask)

# Spacer for readability
# ------------------------------------------------------------------------------

def defaultBattery(seed=DEFAULT_SEED):
    """
    The sixteen families of the 'default16' battery.
    """
    return [
        SyntheticSpec('perfect'),
        SyntheticSpec('empty'),
        SyntheticSpec('inverted'),
        SyntheticSpec('delayed', d=1),
        SyntheticSpec('delayed', d=3),
        SyntheticSpec('truncated', fraction=Fraction(1, 2)),
        SyntheticSpec('truncated', fraction=Fraction(1, 4)),
        SyntheticSpec('oscillating', period=2),
        SyntheticSpec('oscillating', period=3),
        SyntheticSpec('shifted', offset=-2),
        SyntheticSpec('shifted', offset=2),
        SyntheticSpec('merged'),
        SyntheticSpec('extra-false-alarms', count=1, seed=seed),
        SyntheticSpec('extra-false-alarms', count=3, seed=seed + 1),
        SyntheticSpec('extra-false-alarms', count=10, seed=seed + 2),
        SyntheticSpec('random', rate=Fraction(1, 10), seed=seed),
    ]

BATTERIES = {'default16': defaultBattery}

def batteryPredictions(g, name='default16', seed=DEFAULT_SEED):
    """
    (id, prediction) pairs of a named battery for a ground truth.
    """
    if name not in BATTERIES:
        raise ParameterError(f"unknown battery '{name}', expected one of {', '.join(BATTERIES)}")
    return [(spec.label, generateSynthetic(spec, g)) for spec in BATTERIES[name](seed)]
