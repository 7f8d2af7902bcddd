# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import logging
from typing import Tuple

import numpy as np

from pyRACE.classifiers.learner import Learner, require_positive
from pyRACE.classifiers.model import LogRegPayload
from pyRACE.dataset import Dataset
from pyRACE.exception import PyRACEShapeMismatchException
from pyRACE.rng import RngStream
from pyRACE.search import HyperparamAssignment

logger = logging.getLogger(__name__)


def _one_hot(labels: np.ndarray, n_classes: int) -> np.ndarray:
    targets = np.zeros((labels.shape[0], n_classes))
    targets[np.arange(labels.shape[0]), labels] = 1.0
    return targets


def _loss_grad(weights: np.ndarray, bias: np.ndarray, rows: np.ndarray, targets: np.ndarray,
               l2: float) -> Tuple[float, np.ndarray, np.ndarray]:
    logits = rows @ weights.T + bias
    logits = logits - logits.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(logits).sum(axis=1, keepdims=True))
    log_proba = logits - log_norm
    n = rows.shape[0]

    loss = -np.sum(targets * log_proba) / n + 0.5 * l2 * np.sum(weights * weights)
    residual = (np.exp(log_proba) - targets) / n
    grad_weights = residual.T @ rows + l2 * weights
    grad_bias = residual.sum(axis=0)
    return float(loss), grad_weights, grad_bias


def logreg_loss_grad(weights: np.ndarray, bias: np.ndarray, ds: Dataset,
                     l2: float) -> Tuple[float, Tuple[np.ndarray, np.ndarray]]:
    """
    Mean softmax cross-entropy with an L2 penalty on the weights (not on the biases), and its exact gradient

    ``loss = mean_i(-log softmax(W x_i + b)[y_i]) + (l2 / 2) * ||W||^2``

    :param weights: (n_classes, n_features) matrix
    :param bias: (n_classes,) vector
    :param ds: standardized dataset
    :param l2: non negative penalty
    :return: (loss, (gradient w.r.t. weights, gradient w.r.t. bias))
    :raise PyRACEShapeMismatchException: if the parameter shapes don't fit the dataset
    """
    weights = np.asarray(weights, dtype=np.float64)
    bias = np.asarray(bias, dtype=np.float64)
    if weights.shape != (ds.n_classes, ds.n_features) or bias.shape != (ds.n_classes,):
        raise PyRACEShapeMismatchException(f'weights {weights.shape} and bias {bias.shape} for '
                                           f'{ds.n_classes} classes and {ds.n_features} features')
    if l2 < 0:
        raise PyRACEShapeMismatchException('l2 must be non negative')
    loss, grad_weights, grad_bias = _loss_grad(weights, bias, ds.rows, _one_hot(ds.labels, ds.n_classes), l2)
    return loss, (grad_weights, grad_bias)


def step_size_cap(rows: np.ndarray, l2: float) -> float:
    """
    Inverse of an upper bound of the gradient Lipschitz constant, ``1 / (0.5 * (1 + mean ||x||^2) + l2)``

    Full-batch descent with a step below this value never increases the loss.
    """
    mean_sq_norm = float(np.sum(rows * rows)) / rows.shape[0]
    return 1.0 / (0.5 * (1.0 + mean_sq_norm) + l2)


class LogRegLearner(Learner):
    """
    Multinomial logistic regression, zero initialised, full-batch gradient descent with a fixed step and a fixed
    number of iterations
    """

    param_names = ('learning_rate', 'l2', 'iters')

    def _check(self, params: HyperparamAssignment):
        require_positive(params, 'learning_rate')
        require_positive(params, 'l2', allow_zero=True)
        require_positive(params, 'iters', integer=True)

    def fit(self, rows, labels, n_classes, params, stream: RngStream) -> LogRegPayload:
        l2 = float(params['l2'])
        step = min(float(params['learning_rate']), step_size_cap(rows, l2))
        targets = _one_hot(labels, n_classes)
        weights = np.zeros((n_classes, rows.shape[1]))
        bias = np.zeros(n_classes)
        loss = None
        for _ in range(int(params['iters'])):
            loss, grad_weights, grad_bias = _loss_grad(weights, bias, rows, targets, l2)
            weights = weights - step * grad_weights
            bias = bias - step * grad_bias
        logger.debug('logistic regression trained, step %g, last loss %s', step, loss)
        return LogRegPayload(weights, bias)

    def predict_scaled(self, payload: LogRegPayload, params, x) -> int:
        return int(np.argmax(payload.weights @ x + payload.bias))
