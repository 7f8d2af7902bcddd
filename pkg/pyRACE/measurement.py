# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from time import perf_counter_ns
from typing import Optional


class Measurement:
    """
    measure the wall time of a bounded period

    Beginning and end of this period are given by calling ``begin()`` and ``end()`` methods, or by using the instance
    as a context::

        with Measurement('round 3') as measure:
            ...
        measure.duration_ms

    :param label: measurement label
    """

    def __init__(self, label: str):
        self.label = label
        self._ts_begin: Optional[int] = None
        self._ts_end: Optional[int] = None

    def begin(self):
        """
        Start recording
        """
        self._ts_begin = perf_counter_ns()
        self._ts_end = None

    def end(self) -> float:
        """
        End recording

        :return: the measured duration in milliseconds
        """
        self._ts_end = perf_counter_ns()
        return self.duration_ms

    def __enter__(self) -> 'Measurement':
        self.begin()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.end()

    @property
    def duration_ms(self) -> float:
        """
        Access to the measured duration
        """
        if self._ts_begin is None or self._ts_end is None:
            raise AttributeError("No duration measured yet.")
        return (self._ts_end - self._ts_begin) / 1e6
