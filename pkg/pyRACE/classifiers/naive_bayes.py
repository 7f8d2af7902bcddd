# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import numpy as np

from pyRACE.classifiers.learner import Learner, require_positive
from pyRACE.classifiers.model import GaussianNBPayload, TrainedModel
from pyRACE.exception import PyRACEWrongFamilyException
from pyRACE.family import ModelFamily


def _log_joint(payload: GaussianNBPayload, x: np.ndarray) -> np.ndarray:
    """unnormalised log posterior of every class"""
    log_likelihood = -0.5 * np.sum(np.log(2.0 * np.pi * payload.var) + (x - payload.mean) ** 2 / payload.var, axis=1)
    return np.log(payload.prior) + log_likelihood


def nb_class_posterior(model: TrainedModel, x) -> np.ndarray:
    """
    Class posterior of a gaussian naive Bayes model, normalised in log space

    :param x: masked and standardized feature vector (see ``TrainedModel.transform``)
    :return: (n_classes,) probability vector
    :raise PyRACEWrongFamilyException: if the model isn't a GAUSSIAN_NB model
    """
    if model.family != ModelFamily.GAUSSIAN_NB:
        raise PyRACEWrongFamilyException(ModelFamily.GAUSSIAN_NB, model.family)
    log_joint = _log_joint(model.payload, np.asarray(x, dtype=np.float64))
    shifted = np.exp(log_joint - log_joint.max())
    return shifted / shifted.sum()


class GaussianNBLearner(Learner):
    """
    Gaussian naive Bayes; each class variance is floored at ``smoothing * max feature variance``
    """

    param_names = ('smoothing',)

    def _check(self, params):
        require_positive(params, 'smoothing')

    def fit(self, rows, labels, n_classes, params, stream) -> GaussianNBPayload:
        n_rows, n_features = rows.shape
        counts = np.bincount(labels, minlength=n_classes)
        prior = counts / n_rows
        mean = np.zeros((n_classes, n_features))
        var = np.zeros((n_classes, n_features))
        for c in range(n_classes):
            members = rows[labels == c]
            mean[c] = members.mean(axis=0)
            var[c] = members.var(axis=0)

        max_var = float(rows.var(axis=0).max())
        # all features constant: fall back to the bare smoothing value
        floor = float(params['smoothing']) * (max_var if max_var > 0 else 1.0)
        return GaussianNBPayload(prior, mean, np.maximum(var, floor))

    def predict_scaled(self, payload: GaussianNBPayload, params, x) -> int:
        return int(np.argmax(_log_joint(payload, x)))
