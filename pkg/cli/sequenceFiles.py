# File: cli/sequenceFiles.py

"""
TsadLab/cli/sequenceFiles.py

Reads and writes binary sequences in the three supported file formats:
'chars' (a line of 0/1 characters), 'csv' (a `label` column) and 'rle-json'
({"length": n, "ones": [[lo, hi], ...]} with 1-based inclusive intervals).
"""

import csv
import json
import logging
import os

from core.errors import SequenceError, SequenceFileError
from core.sequence import BinarySeq, Interval

FORMATS = ('chars', 'csv', 'rle-json')

_EXTENSIONS = {
    '.csv': 'csv',
    '.json': 'rle-json',
    '.txt': 'chars',
    '.seq': 'chars',
}

# Spacer for readability
# ------------------------------------------------------------------------------

def detectFormat(path, fmt=None):
    """
    Picks the file format: the explicit one when given, else by extension.

    Unknown extensions are read as 'chars'.
    """
    if fmt is not None:
        if fmt not in FORMATS:
            raise SequenceFileError(f"unknown sequence format '{fmt}', expected one of {', '.join(FORMATS)}")
        return fmt
    extension = os.path.splitext(path)[1].lower()
    return _EXTENSIONS.get(extension, 'chars')

# Spacer for readability
# ------------------------------------------------------------------------------

def parseChars(text):
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise SequenceFileError(f"expected a single line of 0/1 characters, found {len(lines)} lines")
    return BinarySeq.fromString(lines[0])

def parseCsv(text):
    reader = csv.DictReader(text.splitlines())
    if reader.fieldnames is None or 'label' not in [name.strip() for name in reader.fieldnames]:
        raise SequenceFileError("csv input needs a 'label' column")
    column = next(name for name in reader.fieldnames if name.strip() == 'label')
    bits = []
    for rowNumber, row in enumerate(reader, start=2):
        value = (row.get(column) or '').strip()
        if value not in ('0', '1'):
            raise SequenceFileError(f"row {rowNumber}: label must be 0 or 1, got '{value}'")
        bits.append(int(value))
    if not bits:
        raise SequenceFileError("csv input has no rows")
    return BinarySeq(tuple(bits))

def parseRleJson(text):
    """
    Parses the run-length JSON form and checks that the intervals are sorted,
    disjoint and non-adjacent.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise SequenceFileError(f"invalid JSON: {e}") from e
    if not isinstance(payload, dict) or set(payload) != {'length', 'ones'}:
        raise SequenceFileError("rle-json input must be an object with exactly 'length' and 'ones'")
    n, ones = payload['length'], payload['ones']
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SequenceFileError(f"'length' must be a positive integer, got {n!r}")
    if not isinstance(ones, list):
        raise SequenceFileError("'ones' must be a list of [lo, hi] pairs")

    intervals = []
    for pair in ones:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
            raise SequenceFileError(f"malformed interval {pair!r}, expected [lo, hi]")
        lo, hi = pair
        if not 1 <= lo <= hi <= n:
            raise SequenceFileError(f"interval [{lo},{hi}] outside [1,{n}]")
        if intervals and lo <= intervals[-1].hi + 1:
            raise SequenceFileError(f"interval [{lo},{hi}] is not sorted, disjoint and non-adjacent "
                                    f"to {intervals[-1]}")
        intervals.append(Interval(lo, hi))
    return BinarySeq.fromIntervals(n, intervals)

_PARSERS = {'chars': parseChars, 'csv': parseCsv, 'rle-json': parseRleJson}

# Spacer for readability
# ------------------------------------------------------------------------------

def readSequence(path, fmt=None):
    """
    Loads a binary sequence from a file.

    Args:
        path (str): File to read.
        fmt (str): One of FORMATS; detected from the extension when None.

    Returns:
        BinarySeq: The sequence.

    Raises:
        SequenceFileError: The file is missing, unreadable or malformed.
    """
    fmt = detectFormat(path, fmt)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise SequenceFileError(f"cannot read '{path}': {e.strerror or e}") from e
    try:
        seq = _PARSERS[fmt](text)
    except (SequenceError, SequenceFileError) as e:
        raise SequenceFileError(f"{path}: {e}") from e
    logging.info(f"Loaded sequence of length {len(seq)} from '{path}' ({fmt})")
    return seq

def formatSequence(seq, fmt):
    """
    Serializes a sequence to the text of one format.
    """
    if fmt == 'chars':
        return f"{seq}\n"
    if fmt == 'csv':
        return 'label\n' + ''.join(f"{b}\n" for b in seq.bits)
    if fmt == 'rle-json':
        ones = [[run.lo, run.hi] for run in seq.onesRuns]
        return json.dumps({'length': len(seq), 'ones': ones}) + '\n'
    raise SequenceFileError(f"unknown sequence format '{fmt}', expected one of {', '.join(FORMATS)}")

def writeSequence(seq, path, fmt=None):
    fmt = detectFormat(path, fmt)
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(formatSequence(seq, fmt))
    except OSError as e:
        raise SequenceFileError(f"cannot write '{path}': {e.strerror or e}") from e
    logging.info(f"Wrote sequence of length {len(seq)} to '{path}' ({fmt})")

# Spacer for readability
# ------------------------------------------------------------------------------

def readPredictionDir(dirPath, fmt=None):
    """
    Loads every sequence file of a directory as (id, BinarySeq) pairs.

    The id is the file name without extension; files are read in name order
    and hidden files are ignored.

    Raises:
        SequenceFileError: The directory is missing or two files share an id.
    """
    if not os.path.isdir(dirPath):
        raise SequenceFileError(f"predictions directory '{dirPath}' does not exist")
    predictions, seen = [], set()
    for name in sorted(os.listdir(dirPath)):
        path = os.path.join(dirPath, name)
        if name.startswith('.') or not os.path.isfile(path):
            continue
        predictionId = os.path.splitext(name)[0]
        if predictionId in seen:
            raise SequenceFileError(f"two prediction files share the id '{predictionId}'")
        seen.add(predictionId)
        predictions.append((predictionId, readSequence(path, fmt)))
    return predictions
