# File: cli/reports.py

"""
TsadLab/cli/reports.py

Turns scores, property reports, rankings and catalog entries into plain JSON
structures and CSV text. Floats carry 12 significant digits; exact rational
scores are also given as "num/den" strings.
"""

import csv
import io
import json
import math
from fractions import Fraction

from metrics.catalog import listCatalog
from metrics.descriptor import formatParam, isUndefined, paramToJson
from properties.expectations import CLAIM_CONDITIONS, CellStatus, expectedSet

SIGNIFICANT_DIGITS = 12

MARK_HOLDS = '✓'
MARK_VIOLATED = '✗'
MARK_CONDITIONAL = '?cond'

# Spacer for readability
# ------------------------------------------------------------------------------

def renderNumber(value):
    """
    JSON-safe rendering of a score: 'undefined', a float rounded to 12
    significant digits, or the strings 'inf', '-inf' and 'nan'.
    """
    if isUndefined(value):
        return 'undefined'
    number = float(value)
    if math.isnan(number):
        return 'nan'
    if math.isinf(number):
        return 'inf' if number > 0 else '-inf'
    rounded = float(format(number, f'.{SIGNIFICANT_DIGITS}g'))
    if rounded == int(rounded) and isinstance(value, (int, Fraction)):
        return int(rounded)
    return rounded

def renderExact(value):
    """
    "num/den" for rational scores, None otherwise.
    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"
    return None

def renderScoreFields(value):
    fields = {'score': renderNumber(value)}
    exact = renderExact(value)
    if exact is not None:
        fields['exact'] = exact
    return fields

def renderCell(value):
    """
    CSV text of a score.
    """
    rendered = renderNumber(value)
    return rendered if isinstance(rendered, str) else repr(rendered)

def paramsJson(descriptor):
    return {name: paramToJson(value) for name, value in descriptor.params}

# Spacer for readability
# ------------------------------------------------------------------------------

def toJson(payload):
    return json.dumps(payload, indent=2, ensure_ascii=False) + '\n'

def toCsv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()

# Spacer for readability
# ------------------------------------------------------------------------------

def scoreReport(result):
    """
    {"metric", "params", "score"[, "exact"]} for a ScoreResult.
    """
    return {'metric': result.metric.id, 'params': paramsJson(result.metric), **renderScoreFields(result.value)}

def scoreCsv(result):
    params = ';'.join(f"{name}={formatParam(value)}" for name, value in result.metric.params)
    return toCsv(['metric', 'params', 'score', 'exact'],
                 [[result.metric.id, params, renderCell(result.value), renderExact(result.value) or '']])

# Spacer for readability
# ------------------------------------------------------------------------------

def witnessJson(witness):
    return {
        **witness.case.asDict(),
        'scoreP': renderScoreFields(witness.scoreP),
        'scoreQ': renderScoreFields(witness.scoreQ),
    }

def propertyCellJson(report, status, mismatch, note=None, fixtureViolation=False):
    """
    One propcheck cell: the enumeration outcome next to the claimed status.
    """
    cell = {
        'metric': report.metric.id,
        'params': paramsJson(report.metric),
        'property': report.property.label,
        'propertyName': report.property.name,
        'maxLen': report.maxLen,
        'verdict': report.verdictText(),
        'expected': status.value,
        'casesChecked': report.casesChecked,
        'skippedUndefined': report.skipped,
        'violations': report.violations,
        'fixtureViolation': fixtureViolation,
        'mismatch': mismatch,
        'witnesses': [witnessJson(w) for w in report.witnesses],
    }
    if note is not None:
        cell['disputeNote'] = note
    return cell

def cellMark(status, violated):
    if status is CellStatus.CONDITIONAL:
        return MARK_CONDITIONAL
    return MARK_VIOLATED if violated else MARK_HOLDS

def matrixCsv(rows, properties):
    """
    Property matrix with one row per metric.

    Args:
        rows (list): (metric label, {property label: mark}) pairs.
        properties (list): PropertyIds, in column order.
    """
    labels = [prop.label for prop in properties]
    return toCsv(['metric'] + labels, [[metric] + [marks.get(label, '') for label in labels]
                                       for metric, marks in rows])

def fixtureJson(result):
    fixture = result.fixture
    payload = {
        'metric': fixture.metric,
        'params': {name: paramToJson(value) for name, value in fixture.params},
        'property': fixture.property,
        'g': fixture.g,
        'better': fixture.better,
        'worse': fixture.worse,
        'scoreBetter': renderScoreFields(result.scoreBetter),
        'scoreWorse': renderScoreFields(result.scoreWorse),
        'relationHolds': result.relationHolds,
        'printedMatches': result.printedMatches,
        'consistent': fixture.consistent,
        'citation': fixture.citation,
    }
    if fixture.printed is not None:
        payload['printed'] = [renderNumber(value) for value in fixture.printed]
    if fixture.note:
        payload['note'] = fixture.note
    return payload

# Spacer for readability
# ------------------------------------------------------------------------------

def rankingRows(table):
    rows = [[e.predictionId, renderCell(e.score), e.rank] for e in table.entries]
    rows += [[pid, 'undefined', table.bottomRank] for pid in table.undefinedBucket]
    return rows

def rankingCsv(table):
    return toCsv(['id', 'score', 'rank'], rankingRows(table))

def rankingJson(table):
    entries = [{'id': e.predictionId, **renderScoreFields(e.score), 'rank': e.rank} for e in table.entries]
    entries += [{'id': pid, 'score': 'undefined', 'rank': table.bottomRank} for pid in table.undefinedBucket]
    return {'metric': table.metric.id, 'params': paramsJson(table.metric), 'entries': entries}

def tauCsv(labels, matrix):
    """
    Square Kendall tau-b matrix, labels on both axes.
    """
    return toCsv(['metric'] + labels, [[label] + [renderCell(tau) for tau in row]
                                       for label, row in zip(labels, matrix)])

def tauJson(labels, matrix):
    return {'metrics': labels, 'tau': [[renderNumber(tau) for tau in row] for row in matrix]}

# Spacer for readability
# ------------------------------------------------------------------------------

def catalogJson():
    """
    Every catalog entry with parameters, citation and claimed property set.
    """
    listing = []
    for entry in listCatalog():
        listing.append({
            'id': entry.id,
            'name': entry.name,
            'family': entry.family,
            'params': [
                {
                    'name': spec.name,
                    'default': paramToJson(spec.default),
                    'range': spec.rangeText(),
                    'description': spec.description,
                }
                for spec in entry.params
            ],
            'citation': entry.citation,
            'expectedProperties': [prop.label for prop in _sorted(expectedSet(entry.id))],
            'conditions': CLAIM_CONDITIONS.get(entry.id, ''),
        })
    return listing

def catalogCsv():
    rows = []
    for item in catalogJson():
        params = ';'.join(f"{p['name']}={p['default']} {p['range']}" for p in item['params'])
        rows.append([item['id'], item['name'], params, item['citation'],
                     ' '.join(item['expectedProperties']), item['conditions']])
    return toCsv(['id', 'name', 'params', 'citation', 'expected', 'conditions'], rows)

def _sorted(props):
    return sorted(props, key=lambda prop: prop.sortKey())
