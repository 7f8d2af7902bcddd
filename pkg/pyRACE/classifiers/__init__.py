# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
The classifier portfolio

Each family has a ``Learner`` that fits a payload on standardized rows and predicts from it. ``train`` wraps every
learner in the same mask / standardize pipeline and returns an immutable ``TrainedModel``::

    model = pyRACE.classifiers.train(ModelFamily.KNN, params, dataset, mask, stream)
    pyRACE.classifiers.predict(model, raw_vector)
"""
from pyRACE.classifiers.model import TrainedModel, TreeNode
from pyRACE.classifiers.model import LogRegPayload, GaussianNBPayload, KnnPayload, TreePayload
from pyRACE.classifiers.learner import Learner
from pyRACE.classifiers.logreg import LogRegLearner, logreg_loss_grad, step_size_cap
from pyRACE.classifiers.naive_bayes import GaussianNBLearner, nb_class_posterior
from pyRACE.classifiers.knn import KnnLearner
from pyRACE.classifiers.tree import TreeLearner, gini, best_split
from pyRACE.classifiers.training import LearnerFactory, train, predict, predict_many
