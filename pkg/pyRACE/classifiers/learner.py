# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from typing import Tuple

import numpy as np

from pyRACE.exception import PyRACEInvalidParamsException
from pyRACE.rng import RngStream
from pyRACE.search import HyperparamAssignment


class Learner:
    """
    Training and prediction logic of one model family

    Learners work on masked and standardized rows; the pipeline around them lives in ``pyRACE.classifiers.train``.
    Subclasses declare ``param_names`` and implement ``_check``, ``fit`` and ``predict_scaled``.
    """

    param_names: Tuple[str, ...] = ()

    def validate(self, params: HyperparamAssignment):
        """
        :raise PyRACEInvalidParamsException: if the assignment misses a parameter or holds a meaningless value
        """
        if params.names() != self.param_names:
            raise PyRACEInvalidParamsException(','.join(params.names()), f'expected {", ".join(self.param_names)}')
        self._check(params)

    def _check(self, params: HyperparamAssignment):
        raise NotImplementedError()

    def fit(self, rows: np.ndarray, labels: np.ndarray, n_classes: int, params: HyperparamAssignment,
            stream: RngStream):
        """
        Abstract method

        :param rows: (n_rows, n_features) standardized training rows
        :param labels: (n_rows,) class indices, every class present
        :param stream: random stream reserved to this training
        :return: the family payload
        """
        raise NotImplementedError()

    def predict_scaled(self, payload, params: HyperparamAssignment, x: np.ndarray) -> int:
        """
        Abstract method

        :param x: masked and standardized feature vector
        :return: class index, ties broken toward the lowest index
        """
        raise NotImplementedError()


def require_positive(params: HyperparamAssignment, name: str, integer: bool = False, allow_zero: bool = False):
    value = params[name]
    if integer and (isinstance(value, bool) or not isinstance(value, (int, np.integer))):
        raise PyRACEInvalidParamsException(name, 'an integer is required')
    if not isinstance(value, (int, float, np.integer, np.floating)) or not np.isfinite(value):
        raise PyRACEInvalidParamsException(name, 'a finite number is required')
    if value < 0 or (value == 0 and not allow_zero):
        raise PyRACEInvalidParamsException(name, 'must be positive' if not allow_zero else 'must be non negative')
