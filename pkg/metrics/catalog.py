# File: metrics/catalog.py

"""
TsadLab/metrics/catalog.py

The metric catalog: one entry per metric id with its scoring function,
parameter specifications and citation. Every scoring entry point resolves
metrics through this table.
"""

from dataclasses import dataclass
from fractions import Fraction

from core.errors import ParameterError, UnknownMetricError
from core.sequence import checkSameLength
from metrics.descriptor import MetricDescriptor, ParamSpec, ScoreResult
from metrics import (
    affiliation, distance, eventWise, kDelay, larm, nab, paExtensions,
    pointAdjusted, pointwise, rangeBased, timeAware, timeSead, timeTolerant,
)

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """
    A catalog row. fn is called as fn(g, p, **params).
    """
    id: str
    family: str
    fn: object
    name: str
    params: tuple = ()
    citation: str = ''

    def paramSpec(self, name):
        for spec in self.params:
            if spec.name == name:
                return spec
        return None

# Spacer for readability
# ------------------------------------------------------------------------------

HALF = Fraction(1, 2)

K_DELAY = ParamSpec('k', 1, kind='int', lower=0, description='delay budget')
K_PERCENT = ParamSpec('kPercent', HALF, lower=0, upper=1, description='PA%K threshold')
DECAY = ParamSpec('d', HALF, lower=0, upper=1, lowerOpen=True, description='decay rate')
BALANCE = ParamSpec('B', 1, kind='int', lower=0, description='balance radius')
BLOCK = ParamSpec('b', 3, kind='int', lower=1, description='block size')
RANGE_ALPHA = ParamSpec('alphaWeight', Fraction(0), lower=0, upper=1, description='existence reward weight')
AWARE_ALPHA = ParamSpec('alphaWeight', HALF, lower=0, upper=1, description='threshold term weight')
AWARE_DELTA = ParamSpec('delta', 1, kind='int', lower=0, description='tail length after an anomaly')
AWARE_THETA = ParamSpec('theta', HALF, lower=0, lowerOpen=True, description='coverage threshold')
TOLERANCE = ParamSpec('delta', 1, kind='int', lower=0, description='time tolerance')
THETA_P = ParamSpec('thetaP', HALF, lower=0, lowerOpen=True, description='alarm coverage threshold')
THETA_R = ParamSpec('thetaR', HALF, lower=0, lowerOpen=True, description='anomaly coverage threshold')
NAB_TP = ParamSpec('aTP', Fraction(1), lower=0, description='detection weight')
NAB_FP = ParamSpec('aFP', Fraction(11, 100), lower=0, description='false positive weight')
NAB_FN = ParamSpec('aFN', Fraction(-1), upper=0, description='missed window weight')
TOLERANCE_T = ParamSpec('t', 2, kind='int', lower=1, description='alarm tolerance')

NAB_PARAMS = (NAB_FN, NAB_FP, NAB_TP)

def _entries():
    return [
        CatalogEntry('pointwise-precision', 'pointwise', pointwise.pointwisePrecision, 'Point-wise precision'),
        CatalogEntry('pointwise-recall', 'pointwise', pointwise.pointwiseRecall, 'Point-wise recall'),
        CatalogEntry('pointwise-f1', 'pointwise', pointwise.pointwiseF1, 'Point-wise F1-score'),

        CatalogEntry('pa-precision', 'point-adjusted', pointAdjusted.paPrecision, 'Point-adjusted precision',
                     citation='Xu et al., 2018'),
        CatalogEntry('pa-recall', 'point-adjusted', pointAdjusted.paRecall, 'Point-adjusted recall',
                     citation='Xu et al., 2018'),
        CatalogEntry('pa-f1', 'point-adjusted', pointAdjusted.paF1, 'Point-adjusted F1-score',
                     citation='Xu et al., 2018'),

        CatalogEntry('event-precision', 'event-wise', eventWise.eventPrecision, 'Event-wise precision'),
        CatalogEntry('event-recall', 'event-wise', eventWise.eventRecall, 'Event-wise recall'),
        CatalogEntry('event-f1', 'event-wise', eventWise.eventF1, 'Event-wise F1-score'),
        CatalogEntry('composite-f1', 'event-wise', eventWise.compositeF1, 'Composite F1-score',
                     citation='Garg et al., 2021'),

        CatalogEntry('kdelay-precision', 'k-delay', kDelay.kDelayPrecision, 'K-delay precision', (K_DELAY,),
                     citation='Ren et al., 2019'),
        CatalogEntry('kdelay-recall', 'k-delay', kDelay.kDelayRecall, 'K-delay recall', (K_DELAY,),
                     citation='Ren et al., 2019'),
        CatalogEntry('kdelay-f1', 'k-delay', kDelay.kDelayF1, 'K-delay F1-score', (K_DELAY,),
                     citation='Ren et al., 2019'),

        CatalogEntry('pa-percent-k', 'pa-extension', paExtensions.paPercentK, 'Point-adjusted F1-score at K%',
                     (K_PERCENT,), citation='Kim et al., 2022'),
        CatalogEntry('pa-percent-k-integrated', 'pa-extension', paExtensions.paPercentKIntegrated,
                     'Integrated point-adjusted F1-score at K%', citation='Kim et al., 2022'),
        CatalogEntry('pa-decay', 'pa-extension', paExtensions.paDecay, 'Point-adjusted F1-score with decay',
                     (DECAY,)),
        CatalogEntry('reduced-length-f1', 'pa-extension', paExtensions.reducedLengthF1, 'Reduced-length F1-score'),
        CatalogEntry('balanced-pa-f1', 'pa-extension', paExtensions.balancedPaF1,
                     'Balanced point-adjusted F1-score', (BALANCE,)),
        CatalogEntry('lsa-f1', 'pa-extension', paExtensions.lsaF1, 'Latency- and sparsity-aware F1-score',
                     (BLOCK,)),

        CatalogEntry('range-precision', 'range-based', rangeBased.rangePrecision, 'Range-based precision',
                     citation='Tatbul et al., 2018'),
        CatalogEntry('range-recall', 'range-based', rangeBased.rangeRecall, 'Range-based recall', (RANGE_ALPHA,),
                     citation='Tatbul et al., 2018'),
        CatalogEntry('range-f1', 'range-based', rangeBased.rangeF1, 'Range-based F1-score', (RANGE_ALPHA,),
                     citation='Tatbul et al., 2018'),

        CatalogEntry('timesead-precision', 'timesead', timeSead.timeSeriesPrecision, 'Time-series precision',
                     citation='Wagner et al., 2023'),
        CatalogEntry('timesead-recall', 'timesead', timeSead.timeSeriesRecall, 'Time-series recall',
                     citation='Wagner et al., 2023'),
        CatalogEntry('timesead-f1', 'timesead', timeSead.timeSeriesF1, 'Time-series F1-score',
                     citation='Wagner et al., 2023'),

        CatalogEntry('nab', 'nab', nab.nabNormalized, 'NAB score (normalised)', NAB_PARAMS,
                     citation='Lavin and Ahmad, 2015'),
        CatalogEntry('nab-raw', 'nab', nab.nabRaw, 'NAB score (raw)', NAB_PARAMS,
                     citation='Lavin and Ahmad, 2015'),

        CatalogEntry('tap', 'time-aware', timeAware.timeAwarePrecision, 'Time-series aware precision',
                     (AWARE_ALPHA, AWARE_DELTA, AWARE_THETA), citation='Hwang et al., 2019'),
        CatalogEntry('tar', 'time-aware', timeAware.timeAwareRecall, 'Time-series aware recall',
                     (AWARE_ALPHA, AWARE_DELTA, AWARE_THETA), citation='Hwang et al., 2019'),

        CatalogEntry('tolerant-precision', 'time-tolerant', timeTolerant.tolerantPrecision,
                     'Time-tolerant precision', (TOLERANCE,)),
        CatalogEntry('tolerant-recall', 'time-tolerant', timeTolerant.tolerantRecall,
                     'Time-tolerant recall', (TOLERANCE,)),

        CatalogEntry('affiliation-precision', 'affiliation', affiliation.affiliationPrecision,
                     'Average precision probability', citation='Huet et al., 2022'),
        CatalogEntry('affiliation-recall', 'affiliation', affiliation.affiliationRecall,
                     'Average recall probability', citation='Huet et al., 2022'),
        CatalogEntry('affiliation-f1', 'affiliation', affiliation.affiliationF1,
                     'Affiliation F1-score', citation='Huet et al., 2022'),

        CatalogEntry('etap', 'enhanced-time-aware', timeAware.enhancedTimeAwarePrecision,
                     'Enhanced time-series aware precision', (THETA_P, THETA_R), citation='Hwang et al., 2022'),
        CatalogEntry('etar', 'enhanced-time-aware', timeAware.enhancedTimeAwareRecall,
                     'Enhanced time-series aware recall', (THETA_P, THETA_R), citation='Hwang et al., 2022'),

        CatalogEntry('temporal-distance', 'distance', distance.negatedTemporalDistance,
                     'Temporal distance (negated)', citation='Kovács et al., 2019'),
        CatalogEntry('average-alert-delay', 'distance', distance.negatedAverageAlertDelay,
                     'Average alert delay (negated)', citation='Xu et al., 2018'),

        CatalogEntry('larm', 'alignment', larm.larm, 'Alignment and accuracy metric (LARM)'),
        CatalogEntry('alarm', 'alignment', larm.alarm, 'Advanced alignment and accuracy metric (ALARM)',
                     (TOLERANCE_T,)),
    ]

CATALOG = {entry.id: entry for entry in _entries()}

# Spacer for readability
# ------------------------------------------------------------------------------

def listCatalog():
    """
    Returns every catalog entry in catalog order.
    """
    return list(CATALOG.values())

def getEntry(metricId):
    try:
        return CATALOG[metricId]
    except KeyError:
        raise UnknownMetricError(metricId) from None

def describe(metricId, **params):
    """
    Builds a MetricDescriptor with validated parameters and defaults filled in.

    Args:
        metricId (str): Catalog identifier, e.g. 'pa-decay'.
        **params: Parameter overrides as numbers or strings ('0.9', '9/10').

    Returns:
        MetricDescriptor: The resolved descriptor.

    Raises:
        UnknownMetricError: The id is not in the catalog.
        ParameterError: A parameter is unknown to the metric or out of range.
    """
    entry = getEntry(metricId)
    unknown = set(params) - {spec.name for spec in entry.params}
    if unknown:
        raise ParameterError(f"metric {metricId} has no parameter(s) {', '.join(sorted(unknown))}")
    resolved = []
    for spec in entry.params:
        value = spec.coerce(params[spec.name]) if spec.name in params else spec.default
        resolved.append((spec.name, spec.validate(value)))
    return MetricDescriptor(metricId, tuple(sorted(resolved)))

def resolveDescriptor(metric, **params):
    """
    Accepts an id or a descriptor; overrides are merged onto a descriptor's params.
    """
    if isinstance(metric, MetricDescriptor):
        if not params:
            return metric
        return describe(metric.id, **{**metric.paramDict, **params})
    return describe(metric, **params)

# Spacer for readability
# ------------------------------------------------------------------------------

def evaluate(descriptor, g, p):
    """
    The raw score value (Fraction, float or UNDEFINED) of an already-resolved descriptor.
    """
    checkSameLength(g, p)
    return getEntry(descriptor.id).fn(g, p, **descriptor.paramDict)

def scoreMetric(metric, g, p, **params):
    """
    Scores prediction p against ground truth g.

    Args:
        metric (str | MetricDescriptor): Metric to evaluate.
        g (BinarySeq): Ground truth.
        p (BinarySeq): Prediction of the same length.
        **params: Parameter overrides.

    Returns:
        ScoreResult: The score with the resolved descriptor.
    """
    descriptor = resolveDescriptor(metric, **params)
    return ScoreResult(evaluate(descriptor, g, p), descriptor)

def scoreFamily(kinds, kind, g, p, **params):
    """
    Dispatches a family-level call such as scorePointwise('f1', g, p).
    """
    if kind not in kinds:
        raise ParameterError(f"unknown kind '{kind}', expected one of {', '.join(kinds)}")
    return scoreMetric(kinds[kind], g, p, **params)
