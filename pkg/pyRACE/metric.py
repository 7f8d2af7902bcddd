# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from enum import IntEnum

from pyRACE.exception import PyRACEConfigException


class Metric(IntEnum):
    """
    Classification performance measures

    Metric.ACCURACY : share of correctly classified rows

    Metric.MACRO_F1 : unweighted mean over classes of the F1 score
    """
    ACCURACY = 0
    MACRO_F1 = 1

    @classmethod
    def from_tag(cls, tag: str) -> 'Metric':
        """
        :param tag: ``accuracy`` or ``macro_f1``, case insensitive
        """
        try:
            return cls[tag.strip().upper()]
        except KeyError:
            raise PyRACEConfigException(f'unknown metric : {tag}')

    @property
    def tag(self) -> str:
        return self.name.lower()


TRAIN = 'train'
VALID = 'valid'
TEST = 'test'
SPLIT_NAMES = (TRAIN, VALID, TEST)
