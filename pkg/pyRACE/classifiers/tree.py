# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from typing import Optional, Sequence, Tuple

import numpy as np

from pyRACE.classifiers.learner import Learner, require_positive
from pyRACE.classifiers.model import TreeNode, TreePayload
from pyRACE.exception import PyRACEEmptyCountsException


def gini(counts: Sequence[int]) -> float:
    """
    Gini impurity ``1 - sum(p_i ** 2)`` of a node

    :param counts: number of rows of each class
    :raise PyRACEEmptyCountsException: if the counts sum to zero
    """
    total = sum(counts)
    if total < 1:
        raise PyRACEEmptyCountsException()
    return 1.0 - sum((count / total) ** 2 for count in counts)


def best_split(rows: np.ndarray, labels: np.ndarray, feature: int, min_leaf: int,
               n_classes: Optional[int] = None) -> Optional[Tuple[float, float]]:
    """
    Best threshold on one feature

    Candidate thresholds are the midpoints between consecutive distinct sorted values; rows with
    ``x[feature] <= threshold`` go left. Both children must hold at least ``min_leaf`` rows.

    :return: (threshold, weighted impurity decrease) maximizing the decrease, the smallest threshold on ties,
             or None if no legal split exists
    """
    labels = np.asarray(labels, dtype=np.int64)
    n = labels.shape[0]
    if n < 2:
        return None
    if n_classes is None:
        n_classes = int(labels.max()) + 1

    values = np.asarray(rows, dtype=np.float64)[:, feature]
    order = np.argsort(values, kind='stable')
    sorted_values = values[order].tolist()
    sorted_labels = labels[order].tolist()

    right = [0] * n_classes
    for label in sorted_labels:
        right[label] += 1
    left = [0] * n_classes
    parent = gini(right)

    best = None
    for i in range(1, n):
        moved = sorted_labels[i - 1]
        left[moved] += 1
        right[moved] -= 1
        low, high = sorted_values[i - 1], sorted_values[i]
        if low == high or i < min_leaf or n - i < min_leaf:
            continue
        decrease = parent - (i * gini(left) + (n - i) * gini(right)) / n
        if best is None or decrease > best[1]:
            threshold = (low + high) / 2.0
            if threshold >= high:
                threshold = low
            best = (threshold, decrease)
    return best


class TreeLearner(Learner):
    """
    Greedy binary decision tree on the gini criterion

    A node is split while its depth is below ``max_depth``, it isn't pure and a split with a positive impurity
    decrease leaves ``min_leaf`` rows on each side. Features are scanned in index order, the lowest index wins ties.
    """

    param_names = ('max_depth', 'min_leaf')

    def _check(self, params):
        require_positive(params, 'max_depth', integer=True)
        require_positive(params, 'min_leaf', integer=True)

    def fit(self, rows, labels, n_classes, params, stream) -> TreePayload:
        max_depth = int(params['max_depth'])
        min_leaf = int(params['min_leaf'])

        def grow(indices: np.ndarray, depth: int) -> TreeNode:
            node_rows = rows[indices]
            node_labels = labels[indices]
            counts = np.bincount(node_labels, minlength=n_classes)
            label = int(np.argmax(counts))
            n = indices.shape[0]
            if depth >= max_depth or counts[label] == n or n < 2 * min_leaf:
                return TreeNode(n, label)

            chosen = None
            for feature in range(rows.shape[1]):
                split = best_split(node_rows, node_labels, feature, min_leaf, n_classes)
                if split is not None and split[1] > 0 and (chosen is None or split[1] > chosen[2]):
                    chosen = (feature, split[0], split[1])
            if chosen is None:
                return TreeNode(n, label)

            feature, threshold, _ = chosen
            goes_left = node_rows[:, feature] <= threshold
            return TreeNode(n, label, feature, threshold,
                            grow(indices[goes_left], depth + 1), grow(indices[~goes_left], depth + 1))

        return TreePayload(grow(np.arange(rows.shape[0]), 0))

    def predict_scaled(self, payload: TreePayload, params, x) -> int:
        node = payload.root
        while not node.is_leaf:
            node = node.left if x[node.feature] <= node.threshold else node.right
        return node.label
