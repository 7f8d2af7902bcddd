# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from enum import IntEnum

from pyRACE.exception import PyRACEUnknownFamilyException


class ModelFamily(IntEnum):
    """
    Classifier families of the pyRACE portfolio

    ModelFamily.LOGREG : multinomial logistic regression trained by full-batch gradient descent

    ModelFamily.GAUSSIAN_NB : gaussian naive Bayes computed in log space

    ModelFamily.KNN : brute-force k nearest neighbours on standardized features

    ModelFamily.TREE : greedy axis-aligned decision tree using the gini criterion
    """
    LOGREG = 0
    GAUSSIAN_NB = 1
    KNN = 2
    TREE = 3

    @classmethod
    def from_tag(cls, tag: str) -> 'ModelFamily':
        """
        :param tag: family name, case insensitive (``logreg``, ``gaussian_nb``, ``knn``, ``tree``)
        :raise PyRACEUnknownFamilyException: if the tag names no family of the portfolio
        """
        try:
            return cls[tag.strip().upper()]
        except KeyError:
            raise PyRACEUnknownFamilyException(tag)

    @property
    def tag(self) -> str:
        return self.name.lower()


PORTFOLIO = (ModelFamily.LOGREG, ModelFamily.GAUSSIAN_NB, ModelFamily.KNN, ModelFamily.TREE)
