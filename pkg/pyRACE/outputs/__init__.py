# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
This module contains class that will be used by ``pyRACE.run`` to export the result of each round

example::

    output_instance = pyRACE.outputs.XXXOutput(...)
    model, report = pyRACE.run(config, dataset, outputs=[output_instance])

You can define your own output by inheriting from the ``Output`` class and implementing the ``add`` method.
This method will receive each round as a ``GenerationResult`` instance and must handle it.

For example, the ``PrintOutput.add`` method prints a one line summary of the round.
"""
from pyRACE.outputs.output import Output, ROW_FIELDS, generation_rows
from pyRACE.outputs.buffered_output import BufferedOutput
from pyRACE.outputs.printoutput import PrintOutput
from pyRACE.outputs.csvoutput import CSVOutput
from pyRACE.outputs.dataframeoutput import DataFrameOutput
