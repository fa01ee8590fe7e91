# File: metrics/descriptor.py

"""
TsadLab/metrics/descriptor.py

Metric descriptors, parameter specifications, score results and the Undefined
sentinel. Rational-valued scores are carried as fractions.Fraction so that
property checks compare them exactly; transcendental scores are floats.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import math

from core.errors import ParameterError

# Spacer for readability
# ------------------------------------------------------------------------------

class Undefined(Enum):
    """
    Marker for a score whose defining denominator is empty.
    """
    UNDEFINED = 'undefined'

    def __repr__(self):
        return 'UNDEFINED'

UNDEFINED = Undefined.UNDEFINED

def isUndefined(value):
    return value is UNDEFINED

# Spacer for readability
# ------------------------------------------------------------------------------

def ratio(numerator, denominator):
    """
    numerator / denominator, exact when both are rational, UNDEFINED on 0.
    """
    if denominator == 0:
        return UNDEFINED
    if isinstance(numerator, (int, Fraction)) and isinstance(denominator, (int, Fraction)):
        return Fraction(numerator) / Fraction(denominator)
    return numerator / denominator

def harmonicMean(a, b):
    """
    2ab / (a + b) with the Undefined conventions of the catalog.

    Undefined or infinite operands give UNDEFINED; two zero operands give 0.
    """
    if isUndefined(a) or isUndefined(b):
        return UNDEFINED
    if isinstance(a, float) and math.isinf(a) or isinstance(b, float) and math.isinf(b):
        return UNDEFINED
    if a + b == 0:
        return Fraction(0)
    return ratio(2 * a * b, a + b)

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class ParamSpec:
    """
    A named metric parameter with its default and admissible range.

    kind is 'int' (integers), 'rational' (parsed to Fraction) or 'real'.
    """
    name: str
    default: object
    kind: str = 'rational'
    lower: object = None
    upper: object = None
    lowerOpen: bool = False
    upperOpen: bool = False
    description: str = ''

    def coerce(self, value):
        """
        Converts a raw value (number or command-line string) to the parameter kind.
        """
        try:
            if self.kind == 'int':
                if isinstance(value, str):
                    value = Fraction(value.strip())
                if Fraction(value).denominator != 1:
                    raise ValueError("not an integer")
                return int(value)
            if self.kind == 'rational':
                if isinstance(value, float):
                    return Fraction(str(value))
                return Fraction(value.strip() if isinstance(value, str) else value)
            return float(value)
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise ParameterError(f"parameter {self.name}: cannot read '{value}' ({e})") from e

    def validate(self, value):
        """
        Raises ParameterError when the value lies outside the admissible range.
        """
        if self.lower is not None:
            if value < self.lower or (self.lowerOpen and value == self.lower):
                raise ParameterError(f"parameter {self.name}={value} below range {self.rangeText()}")
        if self.upper is not None:
            if value > self.upper or (self.upperOpen and value == self.upper):
                raise ParameterError(f"parameter {self.name}={value} above range {self.rangeText()}")
        return value

    def rangeText(self):
        low = '-inf' if self.lower is None else formatParam(self.lower)
        high = 'inf' if self.upper is None else formatParam(self.upper)
        left = '(' if self.lowerOpen or self.lower is None else '['
        right = ')' if self.upperOpen or self.upper is None else ']'
        return f"{left}{low}, {high}{right}"

# Spacer for readability
# ------------------------------------------------------------------------------

def formatParam(value):
    """
    Compact text for a parameter value: integers plain, terminating fractions
    as decimals, other fractions as a/b.
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        text = format(float(value), '.12g')
        if Fraction(text) == value:
            return text
        return f"{value.numerator}/{value.denominator}"
    return str(value)

def paramToJson(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    return value

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricDescriptor:
    """
    A catalog metric identifier together with fully resolved parameters.

    params is a sorted tuple of (name, value) pairs so that descriptors are
    hashable and can be sent to worker processes.
    """
    id: str
    params: tuple = ()
    direction: str = 'higher'

    @property
    def paramDict(self):
        return dict(self.params)

    def label(self):
        if not self.params:
            return self.id
        inner = ','.join(f"{name}={formatParam(value)}" for name, value in self.params)
        return f"{self.id}({inner})"

    def __str__(self):
        return self.label()

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class ScoreResult:
    """
    A metric value (Fraction, float or UNDEFINED) for one (g, p) pair.
    """
    value: object
    metric: MetricDescriptor
    notes: str = field(default='')

    @property
    def isDefined(self):
        return not isUndefined(self.value)

    @property
    def exact(self):
        """
        The exact rational value, or None for float and undefined scores.
        """
        if isinstance(self.value, (int, Fraction)):
            return Fraction(self.value)
        return None

    def asFloat(self):
        if not self.isDefined:
            return None
        return float(self.value)
