# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union

import numpy as np

from pyRACE.dataset import FeatureMask, ScalerStats, standardize_rows
from pyRACE.exception import PyRACEArityMismatchException, PyRACEShapeMismatchException
from pyRACE.family import ModelFamily
from pyRACE.search import HyperparamAssignment


def _frozen(values, dtype=np.float64) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class LogRegPayload:
    """
    :var weights: (n_classes, n_features) weight matrix
    :var bias: (n_classes,) bias vector
    """
    weights: np.ndarray
    bias: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'weights', _frozen(self.weights))
        object.__setattr__(self, 'bias', _frozen(self.bias))

    def check(self, n_features: int, n_classes: int):
        if self.weights.shape != (n_classes, n_features) or self.bias.shape != (n_classes,):
            raise PyRACEShapeMismatchException(f'logistic regression weights {self.weights.shape} '
                                               f'for {n_classes} classes and {n_features} features')


@dataclass(frozen=True, eq=False)
class GaussianNBPayload:
    """
    :var prior: (n_classes,) class priors
    :var mean: (n_classes, n_features) per class feature means
    :var var: (n_classes, n_features) per class feature variances, floored
    """
    prior: np.ndarray
    mean: np.ndarray
    var: np.ndarray

    def __post_init__(self):
        for name in ('prior', 'mean', 'var'):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    def check(self, n_features: int, n_classes: int):
        if self.prior.shape != (n_classes,) or self.mean.shape != (n_classes, n_features) or \
           self.var.shape != (n_classes, n_features):
            raise PyRACEShapeMismatchException('naive Bayes statistics')
        if np.any(self.var <= 0):
            raise PyRACEShapeMismatchException('naive Bayes variances must be positive')


@dataclass(frozen=True, eq=False)
class KnnPayload:
    """
    :var rows: (n_rows, n_features) standardized training rows
    :var labels: (n_rows,) training labels
    """
    rows: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'rows', _frozen(self.rows))
        object.__setattr__(self, 'labels', _frozen(self.labels, np.int64))

    def check(self, n_features: int, n_classes: int):
        if self.rows.ndim != 2 or self.rows.shape[1] != n_features or self.labels.shape != (self.rows.shape[0],):
            raise PyRACEShapeMismatchException('nearest neighbour rows')
        if np.any(self.labels >= n_classes) or np.any(self.labels < 0):
            raise PyRACEShapeMismatchException('nearest neighbour labels')


@dataclass(frozen=True)
class TreeNode:
    """
    Node of a decision tree; leaves have no feature, internal nodes send ``x[feature] <= threshold`` to the left

    :var n_samples: number of training rows reaching the node
    :var label: majority class of those rows (lowest index on ties)
    """
    n_samples: int
    label: int
    feature: Optional[int] = None
    threshold: Optional[float] = None
    left: Optional['TreeNode'] = None
    right: Optional['TreeNode'] = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())

    def leaves(self) -> Iterator['TreeNode']:
        if self.is_leaf:
            yield self
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def nodes(self) -> Iterator['TreeNode']:
        yield self
        if not self.is_leaf:
            yield from self.left.nodes()
            yield from self.right.nodes()


@dataclass(frozen=True)
class TreePayload:
    root: TreeNode

    def check(self, n_features: int, n_classes: int):
        for node in self.nodes():
            if not 0 <= node.label < n_classes:
                raise PyRACEShapeMismatchException('tree leaf label')
            if not node.is_leaf and not 0 <= node.feature < n_features:
                raise PyRACEShapeMismatchException('tree split feature')

    def nodes(self) -> Iterator[TreeNode]:
        return self.root.nodes()


Payload = Union[LogRegPayload, GaussianNBPayload, KnnPayload, TreePayload]


@dataclass(frozen=True, eq=False)
class TrainedModel:
    """
    A fitted classifier together with the pipeline that prepares its inputs

    :var family: model family
    :var params: hyperparameters it was trained with
    :var mask: features it was trained on
    :var scaler: standardization statistics fitted on the masked training rows
    :var payload: family specific fitted values
    :var feature_names: feature columns of the training data, before masking
    :var class_names: class labels of the training data
    """

    family: ModelFamily
    params: HyperparamAssignment
    mask: FeatureMask
    scaler: ScalerStats
    payload: Payload
    feature_names: Tuple[str, ...]
    class_names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'feature_names', tuple(self.feature_names))
        object.__setattr__(self, 'class_names', tuple(self.class_names))
        if len(self.mask) != len(self.feature_names):
            raise PyRACEArityMismatchException(len(self.feature_names), len(self.mask))
        if len(self.scaler) != self.mask.popcount:
            raise PyRACEArityMismatchException(self.mask.popcount, len(self.scaler))
        self.payload.check(self.mask.popcount, self.n_classes)

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    @property
    def n_features(self) -> int:
        """feature count of the raw vectors the model accepts"""
        return len(self.feature_names)

    def transform(self, rows) -> np.ndarray:
        """
        Mask then standardize a raw vector or a matrix of raw rows

        :raise PyRACEArityMismatchException: if the vectors don't have ``n_features`` values
        """
        rows = np.asarray(rows, dtype=np.float64)
        if rows.ndim == 0 or rows.shape[-1] != self.n_features:
            raise PyRACEArityMismatchException(self.n_features, rows.shape[-1] if rows.ndim else 0)
        return standardize_rows(rows[..., self.mask.indices], self.scaler)
