# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import os

from pyRACE.outputs.buffered_output import BufferedOutput
from pyRACE.outputs.output import ROW_FIELDS


class CSVOutput(BufferedOutput):
    """
    Write the evaluation records of each round in csv format on a file

    if the file already exists, the records will be appended to the end of the file, otherwise it will create a new
    file.

    This instance act as a buffer. The method ``add`` add records to the buffer and the method ``save`` append each
    record in the buffer at the end of the csv file. After that, the buffer is flushed

    :param filename: file's name were the records will be written

    :param separator: character used to separate columns in the csv file

    :param append: Turn it to False to delete file if it already exist.
    """

    def __init__(self, filename: str, separator: str = ",", append: bool = True):
        BufferedOutput.__init__(self)
        self._separator = separator
        self._filename = filename

        # Create file with header if it not exist or if append is False
        if not os.path.exists(self._filename) or not append:
            with open(self._filename, "w", encoding="utf-8") as csv_file:
                csv_file.write(separator.join(ROW_FIELDS) + "\n")

    @staticmethod
    def _format_cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "1" if value else "0"
        return str(value)

    def _output_buffer(self):
        """
        Append the buffered rows at the end of the csv file
        """
        with open(self._filename, "a", encoding="utf-8") as csv_file:
            for row in self._buffer:
                csv_file.write(self._separator.join(self._format_cell(row[name]) for name in ROW_FIELDS) + "\n")
