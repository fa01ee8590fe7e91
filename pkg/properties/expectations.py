# File: properties/expectations.py

"""
TsadLab/properties/expectations.py

The claimed property satisfaction of every catalog metric, including the
parameter-dependent claims, and the cells recorded as disputed: a hand-verified
counterexample contradicts the claim, or no defined counterexample can exist
for a claimed violation.
"""

from enum import Enum

from metrics.catalog import CATALOG, resolveDescriptor
from properties.definitions import ADVANCED_PROPERTIES, SIMPLE_PROPERTIES, PropertyId

# Spacer for readability
# ------------------------------------------------------------------------------

class CellStatus(Enum):
    SATISFIED = 'satisfied'
    VIOLATED = 'violated'
    CONDITIONAL = 'conditional'
    DISPUTED = 'disputed'
    UNANALYSED = 'unanalysed'

NONE = frozenset()

def _props(*labels):
    return frozenset(PropertyId.parse(label) for label in labels)

def _when(condition, *labels):
    return _props(*labels) if condition else NONE

# Spacer for readability
# ------------------------------------------------------------------------------

def _nabClaims(params):
    return (
        _when(params['aTP'] > 0 and params['aFN'] < 0, 'P1')
        | _when(params['aFP'] > 0, 'P3')
        | _when(params['aTP'] > 0, 'P8')
    )

# metric id -> params dict -> claimed satisfied properties
_CLAIMS = {
    'pointwise-precision': lambda _: _props('P5'),
    'pointwise-recall': lambda _: _props('P1', 'P5', 'P7'),
    'pointwise-f1': lambda _: _props('P1', 'P5', 'P7'),
    'pa-precision': lambda _: _props('P5', 'P6'),
    'pa-recall': lambda _: _props('P1', 'P5'),
    'pa-f1': lambda _: _props('P1', 'P5', 'P6'),
    'event-precision': lambda _: NONE,
    'event-recall': lambda _: _props('P1', 'P5'),
    'event-f1': lambda _: _props('P1'),
    'composite-f1': lambda _: _props('P1', 'P5', 'P6'),
    'kdelay-precision': lambda _: _props('P5'),
    'kdelay-recall': lambda _: _props('P5'),
    'kdelay-f1': lambda _: _props('P5'),
    'pa-percent-k': lambda prm: _props('P1', 'P5') | _when(prm['kPercent'] == 0, 'P6'),
    'pa-percent-k-integrated': lambda _: _props('P1', 'P5', 'P7'),
    'pa-decay': lambda prm: (
        _props('P5') | _when(prm['d'] < 1, 'P8') | _when(prm['d'] == 1, 'P1', 'P6')
    ),
    'reduced-length-f1': lambda _: _props('P1', 'P5', 'P6'),
    'balanced-pa-f1': lambda _: NONE,
    'lsa-f1': lambda prm: _when(prm['b'] == 1, 'P8'),
    'range-precision': lambda _: _props('P6'),
    'range-recall': lambda _: _props('P1', 'P5', 'P7', 'P9'),
    'range-f1': lambda _: _props('P1', 'P7', 'P9'),
    'timesead-precision': lambda _: NONE,
    'timesead-recall': lambda _: _props('P1', 'P5', 'P7', 'P9'),
    'timesead-f1': lambda _: _props('P1', 'P7', 'P9'),
    'nab': _nabClaims,
    'nab-raw': _nabClaims,
    'tap': lambda _: NONE,
    'tar': lambda _: NONE,
    'tolerant-precision': lambda prm: _when(prm['delta'] == 0, 'P5'),
    'tolerant-recall': lambda prm: _when(prm['delta'] == 0, 'P1', 'P5', 'P7'),
    'affiliation-precision': lambda _: NONE,
    'affiliation-recall': lambda _: NONE,
    'affiliation-f1': lambda _: NONE,
    'etap': lambda _: _props('P5'),
    'etar': lambda _: _props('P5'),
    'temporal-distance': lambda _: _props('P1', 'P7'),
    'average-alert-delay': lambda _: _props('P5', 'P8'),
    'larm': lambda _: frozenset(SIMPLE_PROPERTIES),
    'alarm': lambda _: frozenset(ADVANCED_PROPERTIES),
}

# satisfied "for many but not all parameter combinations"
_CONDITIONAL = {
    'tar': _props('P1', 'P7'),
}

CLAIM_CONDITIONS = {
    'lsa-f1': 'P8 iff b = 1',
    'pa-percent-k': 'P6 iff kPercent = 0',
    'pa-decay': 'P8 iff d < 1; P1 and P6 iff d = 1',
    'nab': 'P1 iff aTP > 0 and aFN < 0; P3 iff aFP > 0; P8 iff aTP > 0',
    'nab-raw': 'P1 iff aTP > 0 and aFN < 0; P3 iff aFP > 0; P8 iff aTP > 0',
    'tolerant-precision': 'P5 iff delta = 0',
    'tolerant-recall': 'P1, P5 and P7 iff delta = 0',
    'tar': 'P1 and P7 for some parameter combinations',
}

# Spacer for readability
# ------------------------------------------------------------------------------

def _always(_):
    return True

# (metric id, property label, params predicate, counterexample g/p/q with scores)
DISPUTED_CELLS = (
    ('alarm', 'A2', _always, 'g=111001 p=100101 q=101101: 2.25 < 2.328125'),
    ('alarm', 'A6', _always, 'g=1011100 p=1110100 q=1010101 (variant ii): 1.578125 < 2.078125'),
    ('alarm', 'A7', _always, 'g=111 p=101 q=100: 1.40625 < 1.75'),
    ('range-f1', 'P1', _always, 'g=101 p=111 q=110: 1/2 < 4/7'),
    ('range-f1', 'P7', _always, 'g=1101 p=1111 q=1011: 4/7 < 20/27'),
    ('etap', 'P5', _always, 'g=000001 p=111011 q=110111: 0.3371 != 0'),
    ('etar', 'P5', _always, 'g=000001 p=111011 q=110111: 1 != 0'),
    ('composite-f1', 'P6', _always, 'g=011100 p=110000 q=111101: 2/3 < 3/4'),
    ('reduced-length-f1', 'P1', _always, 'g=01 p=11 q=10: 0 = 0'),
    ('range-precision', 'P6', _always, 'g=010 p=001 q=101: 0 = 0'),
    ('range-f1', 'P9', _always, 'g=0011 p=1110 q=1101: 4/15 < 2/5'),
    ('timesead-f1', 'P7', _always, 'g=000011 p=111111 q=111101: 1/4 = 1/4'),
    ('timesead-f1', 'P9', _always, 'g=0011 p=1110 q=1101: 4/15 < 1/3'),
    ('affiliation-f1', 'P1', _always,
     'no defined counterexample: ones added inside W raise both precision and recall, '
     'and a q with no prediction in the zone of W has recall -inf and an undefined F1'),
    ('pa-precision', 'P6', _always, 'g=0110 p=1000 q=1001: 0 = 0'),
    ('pa-f1', 'P6', _always, 'g=0110 p=1000 q=1001: 0 = 0'),
    ('reduced-length-f1', 'P6', _always, 'g=0110 p=1000 q=1001: 0 = 0'),
    ('pa-percent-k', 'P6', lambda prm: prm['kPercent'] == 0, 'g=0110 p=1000 q=1001: 0 = 0'),
    ('pa-decay', 'P6', lambda prm: prm['d'] == 1, 'g=0110 p=1000 q=1001: 0 = 0'),
)

def disputeNote(descriptor, prop):
    """
    The recorded counterexample when the cell's claim is disputed, else None.
    """
    params = descriptor.paramDict
    for metricId, label, applies, note in DISPUTED_CELLS:
        if metricId == descriptor.id and label == prop.label and applies(params):
            return note
    return None

# Spacer for readability
# ------------------------------------------------------------------------------

def analysedProperties(metricId):
    """
    Simple properties are analysed for every metric but ALARM, advanced ones for ALARM only.
    """
    return ADVANCED_PROPERTIES if metricId == 'alarm' else SIMPLE_PROPERTIES

def expectedSet(metric):
    """
    Properties claimed satisfied at the descriptor's parameters (conditional claims included).

    Args:
        metric (str | MetricDescriptor): Metric with parameters.

    Returns:
        frozenset: PropertyIds.
    """
    descriptor = resolveDescriptor(metric)
    return _CLAIMS[descriptor.id](descriptor.paramDict) | _CONDITIONAL.get(descriptor.id, NONE)

def expectedCell(metric, prop):
    """
    The claim status of one (metric, property) cell.
    """
    descriptor = resolveDescriptor(metric)
    if prop not in analysedProperties(descriptor.id):
        return CellStatus.UNANALYSED
    if disputeNote(descriptor, prop) is not None:
        return CellStatus.DISPUTED
    if prop in _CONDITIONAL.get(descriptor.id, NONE):
        return CellStatus.CONDITIONAL
    if prop in _CLAIMS[descriptor.id](descriptor.paramDict):
        return CellStatus.SATISFIED
    return CellStatus.VIOLATED

def expectedMatrix():
    """
    Claimed satisfaction set of every catalog metric at its default parameters.

    Returns:
        dict: metric id -> frozenset of PropertyId.
    """
    return {metricId: expectedSet(metricId) for metricId in CATALOG}

def isMismatch(status, violatedByEnumeration, violatedByFixture=False):
    """
    Whether a propcheck outcome contradicts the expected cell.

    Claimed-satisfied cells mismatch on any counterexample; claimed-violated
    cells mismatch when neither the enumerator nor a reference fixture
    produces one. Conditional, disputed and unanalysed cells never mismatch.
    """
    if status is CellStatus.SATISFIED:
        return violatedByEnumeration
    if status is CellStatus.VIOLATED:
        return not (violatedByEnumeration or violatedByFixture)
    return False
