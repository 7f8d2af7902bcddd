# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from pyRACE.result import GenerationResult
from pyRACE.outputs.output import Output


class PrintOutput(Output):
    """
    Output that print one summary line per round on standard output

    :param raw: if True, print the raw GenerationResult instance.
                Otherwise, print a one line summary
    """

    def __init__(self, raw: bool = False):
        Output.__init__(self)

        self._raw = raw

    def _format_output(self, generation: GenerationResult) -> str:
        if self._raw:
            return str(generation)
        leader = generation.survivors[0]
        record = generation.record_of(leader)
        family = generation.candidate_of(leader).family.name
        survivors = ','.join(str(candidate_id) for candidate_id in generation.survivors)
        return (f'round {generation.round} : best {record.score:.6f} (candidate {leader}, {family})'
                f' | best so far {generation.best_score_so_far:.6f} | survivors {survivors}'
                f' | {generation.wall_time_ms:.1f} ms')

    def add(self, generation: GenerationResult):
        """
        print the round summary on standard output

        :param generation: data to print
        """
        print(self._format_output(generation))
