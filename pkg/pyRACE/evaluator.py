# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Scoring of trained candidates
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from pyRACE.classifiers import TrainedModel, predict_many
from pyRACE.dataset import Dataset
from pyRACE.exception import PyRACELengthMismatchException, PyRACEIndexOutOfRangeException
from pyRACE.exception import PyRACEArityMismatchException
from pyRACE.metric import Metric
from pyRACE.result import EvaluationRecord


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """
    :var n_classes: number of classes
    :var counts: (n_classes, n_classes) matrix, ``counts[t][p]`` rows of true class t predicted p
    """

    n_classes: int
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def confusion(preds: Sequence[int], labels: Sequence[int], n_classes: int) -> ConfusionMatrix:
    """
    :raise PyRACELengthMismatchException: if preds and labels differ in length or are empty
    :raise PyRACEIndexOutOfRangeException: if an index isn't in [0, n_classes)
    """
    preds = np.asarray(preds, dtype=np.int64)
    labels = np.asarray(labels, dtype=np.int64)
    if preds.shape != labels.shape or labels.shape[0] < 1:
        raise PyRACELengthMismatchException(labels.shape[0], preds.shape[0])
    for values in (preds, labels):
        bad = values[(values < 0) | (values >= n_classes)]
        if bad.size:
            raise PyRACEIndexOutOfRangeException(int(bad[0]), n_classes)
    counts = np.zeros((n_classes, n_classes), dtype=np.int64)
    np.add.at(counts, (labels, preds), 1)
    return ConfusionMatrix(n_classes, counts)


def accuracy(cm: ConfusionMatrix) -> float:
    return float(np.trace(cm.counts)) / cm.total


def macro_f1(cm: ConfusionMatrix) -> float:
    """
    Unweighted mean of the per class F1 scores; a precision or recall with a zero denominator is 0, and so is the F1
    of a class whose precision and recall are both 0
    """
    scores = []
    for c in range(cm.n_classes):
        true_positive = int(cm.counts[c, c])
        predicted = int(cm.counts[:, c].sum())
        actual = int(cm.counts[c, :].sum())
        precision = true_positive / predicted if predicted else 0.0
        recall = true_positive / actual if actual else 0.0
        scores.append(2.0 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0)
    return sum(scores) / cm.n_classes


def score(cm: ConfusionMatrix, metric: Metric) -> float:
    if metric == Metric.MACRO_F1:
        return macro_f1(cm)
    return accuracy(cm)


def evaluate(model: TrainedModel, ds: Dataset, metric: Metric, split_name: str,
             candidate_id: int) -> EvaluationRecord:
    """
    Score a model on every row of a dataset

    :raise PyRACEArityMismatchException: if the dataset doesn't have the model's raw feature count
    """
    if ds.n_features != model.n_features:
        raise PyRACEArityMismatchException(model.n_features, ds.n_features)
    preds = predict_many(model, ds.rows)
    cm = confusion(preds, ds.labels, model.n_classes)
    return EvaluationRecord(candidate_id, split_name, metric, score(cm, metric), ds.n_rows)
