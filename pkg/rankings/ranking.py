# File: rankings/ranking.py

"""
TsadLab/rankings/ranking.py

Ranks a set of predictions under one metric and compares two rankings with
Kendall's tau-b.
"""

from dataclasses import dataclass
import logging

from scipy.stats import kendalltau

from core.errors import ParameterError
from core.sequence import checkSameLength
from metrics.catalog import evaluate, resolveDescriptor
from metrics.descriptor import isUndefined

# Spacer for readability
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class RankEntry:
    predictionId: str
    score: object
    rank: int

@dataclass(frozen=True)
class RankingTable:
    """
    Competition ranking (1, 1, 3) of the predictions with a defined score,
    best first, followed by the ids whose score is Undefined.
    """
    metric: object
    entries: tuple
    undefinedBucket: tuple = ()

    @property
    def ids(self):
        return [e.predictionId for e in self.entries] + list(self.undefinedBucket)

    @property
    def bottomRank(self):
        """
        Shared rank of the Undefined bucket, below every defined entry.
        """
        return len(self.entries) + 1

    def rankOf(self, predictionId):
        for entry in self.entries:
            if entry.predictionId == predictionId:
                return entry.rank
        if predictionId in self.undefinedBucket:
            return self.bottomRank
        raise KeyError(predictionId)

# Spacer for readability
# ------------------------------------------------------------------------------

def rank(metric, g, predictions):
    """
    Scores every prediction and ranks them.

    Ties share the best rank of their group; ties are listed by id so that the
    input order never matters.

    Args:
        metric (str | MetricDescriptor): Metric to rank by.
        g (BinarySeq): Ground truth.
        predictions (list): (predictionId, BinarySeq) pairs.

    Returns:
        RankingTable: The ranking.
    """
    descriptor = resolveDescriptor(metric)
    ids = [pid for pid, _ in predictions]
    if len(set(ids)) != len(ids):
        raise ParameterError("prediction ids must be unique")

    scored, undefined = [], []
    for pid, prediction in predictions:
        checkSameLength(g, prediction)
        score = evaluate(descriptor, g, prediction)
        if isUndefined(score):
            undefined.append(pid)
        else:
            scored.append((pid, score))

    scored.sort(key=lambda item: item[0])
    scored.sort(key=lambda item: item[1], reverse=True)

    entries = []
    for position, (pid, score) in enumerate(scored):
        if entries and entries[-1].score == score:
            entries.append(RankEntry(pid, score, entries[-1].rank))
        else:
            entries.append(RankEntry(pid, score, position + 1))

    logging.info(f"Ranked {len(predictions)} predictions by {descriptor}, {len(undefined)} undefined")
    return RankingTable(descriptor, tuple(entries), tuple(sorted(undefined)))

# Spacer for readability
# ------------------------------------------------------------------------------

def kendallTau(a, b):
    """
    Kendall's tau-b between the rank assignments of two tables over the same ids.

    The Undefined bucket counts as one tied group at the bottom. When one
    ranking is a single tie group tau-b is undefined: identical rankings give
    1.0, anything else gives nan.

    Args:
        a (RankingTable): First ranking.
        b (RankingTable): Second ranking.

    Returns:
        float: tau-b in [-1, 1], or nan.
    """
    ids = sorted(a.ids)
    if ids != sorted(b.ids):
        raise ParameterError("rankings cover different prediction ids")
    if len(ids) < 2:
        raise ParameterError("kendall tau needs at least two predictions")
    ranksA = [a.rankOf(pid) for pid in ids]
    ranksB = [b.rankOf(pid) for pid in ids]
    if ranksA == ranksB:
        return 1.0
    tau, _ = kendalltau(ranksA, ranksB, variant='b')
    return float(tau)
