# File: core/errors.py

"""
TsadLab/core/errors.py

Exception hierarchy shared by the library and the command-line front end.
Library code raises these; the CLI turns them into exit status 2.
"""

# Spacer for readability
# ------------------------------------------------------------------------------

class TsadLabError(Exception):
    """
    Base class for every error raised by TsadLab.
    """

# Spacer for readability
# ------------------------------------------------------------------------------

class SequenceError(TsadLabError, ValueError):
    """
    A binary sequence or interval is malformed (bad bit, empty, out of range).
    """

class LengthMismatchError(SequenceError):
    """
    Two sequences that must be compared position by position differ in length.
    """

    def __init__(self, expected, actual, what="prediction"):
        super().__init__(f"{what} has length {actual}, expected {expected}")
        self.expected = expected
        self.actual = actual

# Spacer for readability
# ------------------------------------------------------------------------------

class ParameterError(TsadLabError, ValueError):
    """
    A metric parameter, enumeration bound or synthetic spec is out of range.
    """

class UnknownMetricError(TsadLabError, KeyError):
    """
    A metric identifier is not present in the catalog.
    """

    def __str__(self):
        return f"unknown metric '{self.args[0]}'"

class UnknownPropertyError(TsadLabError, KeyError):
    """
    A property identifier is not one of P1-P9 or A1-A9.
    """

    def __str__(self):
        return f"unknown property '{self.args[0]}'"

# Spacer for readability
# ------------------------------------------------------------------------------

class SequenceFileError(TsadLabError):
    """
    A sequence file cannot be read or does not follow its declared format.
    """
