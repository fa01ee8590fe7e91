# File: cli/commands.py

"""
TsadLab/cli/commands.py

Handlers behind the score, classify, propcheck, rank and catalog subcommands.
Each handler takes the parsed arguments and the loaded configuration and
returns the process exit status; library errors propagate to main.py.
"""

from concurrent.futures import ProcessPoolExecutor
import logging
import os
import sys

from config.configManager import resolveWorkers
from core.alarms import classifyAlarms
from core.errors import ParameterError
from core.sequence import checkSameLength
from metrics.catalog import CATALOG, describe, getEntry, scoreMetric
from properties.checker import checkProperty
from properties.definitions import parsePropertyList
from properties.expectations import (
    analysedProperties, disputeNote, expectedCell, isMismatch,
)
from properties.fixtures import evaluateFixtures, fixtureViolates
from rankings.ranking import kendallTau, rank
from rankings.synthetic import batteryPredictions
from cli import reports
from cli.sequenceFiles import readPredictionDir, readSequence
from loggingSetup import workerLogging

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_UNDEFINED = 3
EXIT_MISMATCH = 4

PROPERTY_KEYWORDS = ('all', 'simple', 'advanced')

# Spacer for readability
# ------------------------------------------------------------------------------

def parseParams(pairs):
    """
    Reads --params values of the form name=value into a dict of strings.
    """
    params = {}
    for pair in pairs or []:
        name, sep, value = pair.partition('=')
        if not sep or not name.strip() or not value.strip():
            raise ParameterError(f"expected name=value, got '{pair}'")
        params[name.strip()] = value.strip()
    return params

def selectMetrics(text, params=None):
    """
    Resolves a --metric(s) value ('all' or a comma list) to descriptors.

    Parameter overrides apply only when a single metric is selected.
    """
    if text.strip().lower() == 'all':
        ids = list(CATALOG)
    else:
        ids = []
        for part in text.split(','):
            metricId = part.strip()
            if metricId and metricId not in ids:
                getEntry(metricId)
                ids.append(metricId)
    if not ids:
        raise ParameterError("no metric selected")
    if params and len(ids) > 1:
        raise ParameterError("--params can only be combined with a single metric")
    return [describe(metricId, **(params or {})) for metricId in ids]

def emit(text, outPath=None):
    """
    Writes command output to a file, or to stdout when no path is given.
    """
    if outPath:
        with open(outPath, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        logging.info(f"Wrote output to '{outPath}'")
    else:
        sys.stdout.write(text)

def _writeInto(outDir, name, text):
    path = os.path.join(outDir, name)
    emit(text, path)
    return path

# Spacer for readability
# ------------------------------------------------------------------------------

def cmdScore(args, config):
    """
    Scores one prediction file against a ground truth file.

    Returns:
        int: 0 on a defined score, 3 when the score is Undefined.
    """
    g = readSequence(args.gt, args.input_format)
    p = readSequence(args.pred, args.input_format)
    result = scoreMetric(args.metric, g, p, **parseParams(args.params))
    if args.format == 'csv':
        emit(reports.scoreCsv(result), args.out)
    else:
        emit(reports.toJson(reports.scoreReport(result)), args.out)
    logging.info(f"Scored {result.metric}: {reports.renderNumber(result.value)}")
    return EXIT_OK if result.isDefined else EXIT_UNDEFINED

def cmdClassify(args, config):
    """
    Prints the detected, true false, early and late alarms of a prediction.
    """
    g = readSequence(args.gt, args.input_format)
    p = readSequence(args.pred, args.input_format)
    checkSameLength(g, p)
    classes = classifyAlarms(g, p).asDict()
    payload = {name: [[a.lo, a.hi] for a in alarms] for name, alarms in classes.items()}
    if args.format == 'csv':
        rows = [[name, alarm.lo, alarm.hi] for name, alarms in classes.items() for alarm in alarms]
        emit(reports.toCsv(['class', 'lo', 'hi'], rows), args.out)
    else:
        emit(reports.toJson(payload), args.out)
    return EXIT_OK

# Spacer for readability
# ------------------------------------------------------------------------------

def _fixtureMismatch(result):
    """
    A self-consistent reference fixture must still reproduce its printed
    scores and still violate its property.
    """
    if not result.fixture.consistent:
        return False
    return result.printedMatches is False or result.relationHolds is True

def cmdPropcheck(args, config):
    """
    Checks metrics against properties and compares the outcome with the
    claimed property matrix.

    Keyword property selections ('all', 'simple', 'advanced') are narrowed to
    the properties analysed for each metric; explicit lists are checked as given.

    Returns:
        int: 0 when every cell agrees with its claim, 4 otherwise.
    """
    settings = config.get('propcheck', {})
    maxLen = args.max_len if args.max_len is not None else settings.get('maxLen', 6)
    witnessLimit = settings.get('witnessLimit', 10)
    workers = resolveWorkers(args.workers, config)
    descriptors = selectMetrics(args.metric, parseParams(args.params))
    requested = parsePropertyList(args.properties)
    keyword = args.properties.strip().lower() in PROPERTY_KEYWORDS
    fixtureResults = evaluateFixtures()

    cells, rows, mismatches, columns = [], [], [], set()
    for descriptor in descriptors:
        analysed = analysedProperties(descriptor.id)
        props = [prop for prop in requested if prop in analysed] if keyword else list(requested)
        marks = {}
        for prop in props:
            report = checkProperty(descriptor, prop, maxLen, workers=workers, witnessLimit=witnessLimit)
            status = expectedCell(descriptor, prop)
            byFixture = fixtureViolates(descriptor, prop, fixtureResults)
            mismatch = isMismatch(status, report.violated, byFixture)
            marks[prop.label] = reports.cellMark(status, report.violated or byFixture)
            cells.append(reports.propertyCellJson(report, status, mismatch, disputeNote(descriptor, prop), byFixture))
            columns.add(prop)
            if mismatch:
                mismatches.append(f"{descriptor} {prop.label}: expected {status.value}, found {report.verdictText()}")
        rows.append((descriptor.label(), marks))

    payload = {'maxLen': maxLen, 'cells': cells}
    if args.fixtures:
        selected = {descriptor.id for descriptor in descriptors}
        chosen = [r for r in fixtureResults if r.fixture.metric in selected]
        payload['fixtures'] = [reports.fixtureJson(r) for r in chosen]
        for r in chosen:
            if _fixtureMismatch(r):
                mismatches.append(f"fixture {r.fixture.metric} {r.fixture.property} ({r.fixture.citation}): "
                                  f"printed scores or violation not reproduced")
    payload['mismatches'] = mismatches

    columns = sorted(columns, key=lambda prop: prop.sortKey())
    matrix = reports.matrixCsv(rows, columns)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _writeInto(args.out, 'propcheck.json', reports.toJson(payload))
        _writeInto(args.out, 'matrix.csv', matrix)
        print(f"🐰 Checked {len(cells)} cell(s) up to length {maxLen}; reports written to '{args.out}'.")
    elif args.format == 'csv':
        emit(matrix)
    else:
        emit(reports.toJson(payload))

    for mismatch in mismatches:
        print(f"🚫 Mismatch: {mismatch}", file=sys.stderr)
        logging.error(f"Property matrix mismatch: {mismatch}")
    logging.info(f"propcheck finished: {len(cells)} cells, {len(mismatches)} mismatch(es)")
    return EXIT_MISMATCH if mismatches else EXIT_OK

# Spacer for readability
# ------------------------------------------------------------------------------

def _rankPacked(args):
    return rank(*args)

def loadPredictions(args, config, g):
    """
    Predictions from --preds or a generated --battery, as (id, BinarySeq) pairs.
    """
    if args.battery:
        seed = args.seed if args.seed is not None else config.get('rank', {}).get('batterySeed', 7)
        predictions = batteryPredictions(g, args.battery, seed)
    else:
        predictions = readPredictionDir(args.preds, args.input_format)
    if len(predictions) < 2:
        raise ParameterError(f"ranking needs at least two predictions, got {len(predictions)}")
    for _, prediction in predictions:
        checkSameLength(g, prediction)
    return predictions

def cmdRank(args, config):
    """
    Ranks the predictions under every selected metric and compares the rankings.

    With --out, writes <metric>.csv per metric, tau.csv and rankings.json.
    """
    descriptors = selectMetrics(args.metrics, parseParams(args.params))
    workers = resolveWorkers(args.workers, config)
    g = readSequence(args.gt, args.input_format)
    predictions = loadPredictions(args, config, g)

    jobs = [(descriptor, g, predictions) for descriptor in descriptors]
    if workers > 1 and len(jobs) > 1:
        with workerLogging() as (initializer, initargs), \
                ProcessPoolExecutor(max_workers=workers, initializer=initializer, initargs=initargs) as executor:
            tables = list(executor.map(_rankPacked, jobs))
    else:
        tables = [rank(*job) for job in jobs]

    labels = [descriptor.label() for descriptor in descriptors]
    tau = [[kendallTau(a, b) for b in tables] for a in tables]
    payload = {
        'predictions': [pid for pid, _ in predictions],
        'rankings': [reports.rankingJson(table) for table in tables],
        **reports.tauJson(labels, tau),
    }

    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for table in tables:
            _writeInto(args.out, f"{table.metric.id}.csv", reports.rankingCsv(table))
        _writeInto(args.out, 'tau.csv', reports.tauCsv(labels, tau))
        _writeInto(args.out, 'rankings.json', reports.toJson(payload))
        print(f"🐰 Ranked {len(predictions)} predictions under {len(tables)} metric(s); "
              f"tables written to '{args.out}'.")
    elif args.format == 'csv':
        emit(reports.tauCsv(labels, tau))
    else:
        emit(reports.toJson(payload))
    logging.info(f"rank finished: {len(tables)} metric(s), {len(predictions)} predictions")
    return EXIT_OK

# Spacer for readability
# ------------------------------------------------------------------------------

def cmdCatalog(args, config):
    """
    Lists every catalog metric with its parameters, citation and claimed properties.
    """
    if args.format == 'csv':
        emit(reports.catalogCsv(), args.out)
    else:
        emit(reports.toJson(reports.catalogJson()), args.out)
    return EXIT_OK
