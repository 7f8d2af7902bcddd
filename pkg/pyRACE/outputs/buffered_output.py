# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from typing import Dict, List

from pyRACE.result import GenerationResult
from pyRACE.outputs.output import Output, generation_rows


class BufferedOutput(Output):
    """
    Use a buffer to batch the output process

    The method ``add`` adds one row per evaluation record of the round to the buffer and the method ``save`` outputs
    each row in the buffer. After that, the buffer is flushed

    Implement the abstract method ``_output_buffer`` to define how to output buffered rows
    """

    def __init__(self):
        Output.__init__(self)
        self._buffer = []

    def add(self, generation: GenerationResult):
        """
        Add the records of the given round to the buffer

        :param generation: round whose records must be added to the buffer
        """
        self._buffer.extend(generation_rows(generation))

    @property
    def buffer(self) -> List[Dict]:
        """
        Return the buffer content

        :return: a list of rows, one per evaluation record, keys in ``ROW_FIELDS`` order
        """
        return self._buffer

    def _output_buffer(self):
        """
        Abstract method

        Output all the rows contained in the buffer
        """
        raise NotImplementedError()

    def save(self):
        """
        Output each row in the buffer and empty the buffer
        """
        self._output_buffer()
        self._buffer = []
