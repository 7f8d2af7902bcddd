# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import pandas

from pyRACE.result import GenerationResult
from pyRACE.outputs.output import Output, ROW_FIELDS, generation_rows


class DataFrameOutput(Output):
    """
    Append the evaluation records of each round to a pandas Dataframe
    """
    def __init__(self):
        Output.__init__(self)
        self._rows = []

    def add(self, generation: GenerationResult):
        """
        Append the records of a round to the pandas Dataframe

        :param generation: round to add to the dataframe
        """
        self._rows.extend(generation_rows(generation))

    @property
    def data(self) -> pandas.DataFrame:
        """
        Return the dataframe that contains the recorded rounds

        :return: the dataframe, one row per evaluation record
        """
        return pandas.DataFrame(self._rows, columns=list(ROW_FIELDS))
