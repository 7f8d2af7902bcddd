# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from pyRACE.exception import PyRACEInvalidDatasetException
from pyRACE.metric import Metric, SPLIT_NAMES
from pyRACE.search import CandidateSpec


@dataclass(frozen=True)
class EvaluationRecord:
    """
    Score of one candidate on one dataset split, the scoreboard unit

    :var candidate_id: evaluated candidate
    :vartype candidate_id: int
    :var split_name: ``train``, ``valid`` or ``test``
    :vartype split_name: str
    :var metric: measure used
    :vartype metric: Metric
    :var score: value in [0, 1]
    :vartype score: float
    :var n_examples: number of evaluated rows
    :vartype n_examples: int
    """

    candidate_id: int
    split_name: str
    metric: Metric
    score: float
    n_examples: int

    def __post_init__(self):
        if self.split_name not in SPLIT_NAMES:
            raise PyRACEInvalidDatasetException(f'unknown split {self.split_name}')
        if not 0.0 <= self.score <= 1.0:
            raise PyRACEInvalidDatasetException(f'score {self.score} out of [0, 1]')
        if self.n_examples < 1:
            raise PyRACEInvalidDatasetException('an evaluation needs at least one example')


@dataclass(frozen=True)
class GenerationResult:
    """
    Outcome of one round of the race

    :var round: round number, starting at 0
    :var candidates: the round population, ordered by id
    :var records: validation records, one per candidate, ordered by candidate id
    :var survivors: ids of the best performers, ordered by (score desc, id asc)
    :var best_score_so_far: best validation score of the run up to this round
    :var wall_time_ms: duration of the round
    """

    round: int
    candidates: Tuple[CandidateSpec, ...]
    records: Tuple[EvaluationRecord, ...]
    survivors: Tuple[int, ...]
    best_score_so_far: float
    wall_time_ms: float = 0.0

    def record_of(self, candidate_id: int) -> EvaluationRecord:
        for record in self.records:
            if record.candidate_id == candidate_id:
                return record
        raise KeyError(candidate_id)

    def candidate_of(self, candidate_id: int) -> CandidateSpec:
        for candidate in self.candidates:
            if candidate.id == candidate_id:
                return candidate
        raise KeyError(candidate_id)


@dataclass(frozen=True)
class RunReport:
    """
    Audit trail of a run

    :var config: configuration of the run (``OptimizerConfig``)
    :var rounds: one result per executed round
    :var winner: best candidate of the last round
    :var winner_score: its validation score
    :var final_test: the single evaluation on the test split, of the winner refitted on train and validation rows
    :var warnings: non fatal anomalies detected during the run
    """

    config: object
    rounds: Tuple[GenerationResult, ...]
    winner: CandidateSpec
    winner_score: float
    final_test: EvaluationRecord
    warnings: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def best_scores(self) -> List[float]:
        return [generation.best_score_so_far for generation in self.rounds]

    @property
    def last_round(self) -> Optional[GenerationResult]:
        return self.rounds[-1] if self.rounds else None
