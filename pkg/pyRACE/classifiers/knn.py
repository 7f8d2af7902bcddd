# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import numpy as np

from pyRACE.classifiers.learner import Learner, require_positive
from pyRACE.classifiers.model import KnnPayload
from pyRACE.exception import PyRACEInvalidParamsException

UNIFORM = 0
INVERSE_DISTANCE = 1

DISTANCE_EPSILON = 1e-12


class KnnLearner(Learner):
    """
    Brute-force k nearest neighbours, euclidean distance on standardized features

    Neighbours at equal distance are ranked by training row order. Votes are uniform or weighted by
    ``1 / (d + 1e-12)``.
    """

    param_names = ('k', 'weighting')

    def _check(self, params):
        require_positive(params, 'k', integer=True)
        if params['weighting'] not in (UNIFORM, INVERSE_DISTANCE):
            raise PyRACEInvalidParamsException('weighting', 'expected 0 (uniform) or 1 (inverse_distance)')

    def fit(self, rows, labels, n_classes, params, stream) -> KnnPayload:
        return KnnPayload(rows, labels)

    def predict_scaled(self, payload: KnnPayload, params, x) -> int:
        distances = np.sqrt(np.sum((payload.rows - x) ** 2, axis=1))
        k = min(int(params['k']), distances.shape[0])
        neighbours = np.argsort(distances, kind='stable')[:k]

        n_classes = int(payload.labels.max()) + 1
        votes = [0.0] * n_classes
        for index in neighbours:
            if params['weighting'] == INVERSE_DISTANCE:
                votes[payload.labels[index]] += 1.0 / (distances[index] + DISTANCE_EPSILON)
            else:
                votes[payload.labels[index]] += 1.0
        return int(np.argmax(votes))
