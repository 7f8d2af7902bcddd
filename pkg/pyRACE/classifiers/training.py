# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import logging
from typing import List

import numpy as np

from pyRACE.classifiers.knn import KnnLearner
from pyRACE.classifiers.learner import Learner
from pyRACE.classifiers.logreg import LogRegLearner
from pyRACE.classifiers.model import TrainedModel
from pyRACE.classifiers.naive_bayes import GaussianNBLearner
from pyRACE.classifiers.tree import TreeLearner
from pyRACE.dataset import Dataset, FeatureMask, apply_standardizer, check_class_coverage, fit_standardizer, project
from pyRACE.exception import PyRACEDegenerateDataException, PyRACEUnknownFamilyException
from pyRACE.family import ModelFamily
from pyRACE.rng import RngStream
from pyRACE.search import HyperparamAssignment

logger = logging.getLogger(__name__)


class LearnerFactory:
    """
    Factory Returning Learner
    """
    _learners = {
        ModelFamily.LOGREG: LogRegLearner(),
        ModelFamily.GAUSSIAN_NB: GaussianNBLearner(),
        ModelFamily.KNN: KnnLearner(),
        ModelFamily.TREE: TreeLearner(),
    }

    @staticmethod
    def create_learner(family: ModelFamily) -> Learner:
        """
        :param family: the model family of the learner
        :return: the (stateless, shareable) learner of this family
        """
        try:
            return LearnerFactory._learners[family]
        except KeyError:
            raise PyRACEUnknownFamilyException(family)


def train(family: ModelFamily, params: HyperparamAssignment, ds: Dataset, mask: FeatureMask,
          stream: RngStream) -> TrainedModel:
    """
    Train a model through the fixed pipeline: project by mask, fit and apply a standardizer, fit the family learner

    :param stream: random stream reserved to this training
    :raise PyRACEInvalidParamsException: if params don't fit the family
    :raise PyRACEDegenerateDataException: if ds holds fewer than two classes or misses one of its classes
    """
    learner = LearnerFactory.create_learner(family)
    learner.validate(params)
    if ds.n_classes < 2:
        raise PyRACEDegenerateDataException('at least two classes are required')
    check_class_coverage(ds)

    projected = project(ds, mask)
    scaler = fit_standardizer(projected)
    scaled = apply_standardizer(projected, scaler)
    payload = learner.fit(np.asarray(scaled.rows), np.asarray(scaled.labels), ds.n_classes, params, stream)
    logger.debug('trained %s on %d rows, mask %s', family.name, ds.n_rows, mask)
    return TrainedModel(family, params, mask, scaler, payload, ds.feature_names, ds.class_names)


def predict(model: TrainedModel, x) -> int:
    """
    :param x: raw feature vector with one value per feature of the training data
    :return: predicted class index, ties broken toward the lowest index
    :raise PyRACEArityMismatchException: if x doesn't have ``model.n_features`` values
    """
    learner = LearnerFactory.create_learner(model.family)
    return learner.predict_scaled(model.payload, model.params, model.transform(np.asarray(x, dtype=np.float64)))


def predict_many(model: TrainedModel, rows) -> List[int]:
    """
    Row-wise ``predict`` over a matrix of raw rows
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    learner = LearnerFactory.create_learner(model.family)
    scaled = model.transform(rows)
    return [learner.predict_scaled(model.payload, model.params, x) for x in scaled]
