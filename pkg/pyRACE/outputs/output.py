# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from typing import Dict, List

from pyRACE.result import GenerationResult

ROW_FIELDS = ('round', 'candidate_id', 'family', 'parent_id', 'mask', 'metric', 'score', 'survivor')


def generation_rows(generation: GenerationResult) -> List[Dict]:
    """
    Flatten a round into one dictionary per evaluated candidate, keys in ``ROW_FIELDS`` order
    """
    rows = []
    for record in generation.records:
        candidate = generation.candidate_of(record.candidate_id)
        rows.append({
            'round': generation.round,
            'candidate_id': record.candidate_id,
            'family': candidate.family.name,
            'parent_id': candidate.parent_id,
            'mask': str(candidate.mask),
            'metric': record.metric.tag,
            'score': record.score,
            'survivor': record.candidate_id in generation.survivors,
        })
    return rows


class Output:
    """
    Abstract class that represent an output handler for the rounds of an optimizer run
    """

    def add(self, generation: GenerationResult):
        """
        Handle the object `GenerationResult`

        :param generation: data to handle
        """
        raise NotImplementedError()
