# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
The race: populate, train every candidate, evaluate on the validation split, keep the best performers, mutate, repeat,
then refit the winner and evaluate it once on the test split
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pyRACE.classifiers import TrainedModel, train
from pyRACE.dataset import Dataset, SplitSpec, merge, split_three_way
from pyRACE.evaluator import evaluate
from pyRACE.exception import PyRACEInfeasibleConfigException, PyRACEKTooLargeException
from pyRACE.family import ModelFamily, PORTFOLIO
from pyRACE.measurement import Measurement
from pyRACE.metric import Metric, TEST, VALID
from pyRACE.outputs import Output
from pyRACE.result import EvaluationRecord, GenerationResult, RunReport
from pyRACE.rng import derive_stream, training_stream
from pyRACE.search import CandidateSpec, MutationConfig, SearchSpace, mutate_candidate, sample_candidate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimizerConfig:
    """
    Parameters of a run

    :var master_seed: seed every random stream of the run is derived from
    :var rounds: maximal number of rounds
    :var population: candidates evaluated in each round
    :var survivors: best performers kept unchanged for the next round
    :var fresh_per_round: newly sampled candidates in each round after the first
    :var families: model families of the portfolio taking part in the race
    :var metric: selection measure
    :var mutation: step sizes of the mutation operator
    :var split: train / validation / test partition
    :var patience: if set, stop after this many consecutive rounds improving the best score by less than min_delta
    :var min_delta: smallest improvement that resets the patience counter
    """

    master_seed: int = 0
    rounds: int = 5
    population: int = 16
    survivors: int = 4
    fresh_per_round: int = 4
    families: Tuple[ModelFamily, ...] = PORTFOLIO
    metric: Metric = Metric.ACCURACY
    mutation: MutationConfig = field(default_factory=MutationConfig)
    split: SplitSpec = field(default_factory=SplitSpec)
    patience: Optional[int] = None
    min_delta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'families', tuple(ModelFamily(family) for family in self.families))
        if not 0 <= self.master_seed < 2 ** 64:
            raise PyRACEInfeasibleConfigException('the seed must be a 64-bit unsigned integer')
        if self.rounds < 1:
            raise PyRACEInfeasibleConfigException('at least one round is required')
        if self.population < 2:
            raise PyRACEInfeasibleConfigException('the population holds at least 2 candidates')
        if not 1 <= self.survivors < self.population:
            raise PyRACEInfeasibleConfigException('survivors must lie in [1, population)')
        if self.fresh_per_round < 0 or self.survivors + self.fresh_per_round > self.population:
            raise PyRACEInfeasibleConfigException('survivors + fresh must not exceed the population')
        if not self.families:
            raise PyRACEInfeasibleConfigException('at least one model family is required')
        if len(set(self.families)) != len(self.families):
            raise PyRACEInfeasibleConfigException('model families must be distinct')
        if self.patience is not None and self.patience < 1:
            raise PyRACEInfeasibleConfigException('patience must be at least 1')
        if self.min_delta < 0:
            raise PyRACEInfeasibleConfigException('min_delta must be non negative')


def select_survivors(records: Sequence[EvaluationRecord], k: int) -> List[int]:
    """
    :return: ids of the k best records ordered by (score descending, candidate id ascending)
    :raise PyRACEKTooLargeException: if k isn't in [1, len(records)]
    """
    if not 1 <= k <= len(records):
        raise PyRACEKTooLargeException(k, len(records))
    ranked = sorted(records, key=lambda record: (-record.score, record.candidate_id))
    return [record.candidate_id for record in ranked[:k]]


def initial_population(cfg: OptimizerConfig, space: SearchSpace, n_features: int) -> List[CandidateSpec]:
    """
    Round 0: ``population`` sampled candidates, families assigned round-robin, ids 0..population-1
    """
    return [sample_candidate(space, cfg.families[slot % len(cfg.families)], n_features,
                             derive_stream(cfg.master_seed, 0, slot), slot)
            for slot in range(cfg.population)]


def next_generation(survivors: Sequence[CandidateSpec], cfg: OptimizerConfig, space: SearchSpace, round_index: int,
                    master_seed: int, next_id: int, n_features: int) -> List[CandidateSpec]:
    """
    Build the population of a round from the survivors of the previous one

    Slots are filled in this order: the survivors, unchanged; ``fresh_per_round`` sampled candidates, families
    round-robin; mutated children of the survivors, cycling in rank order, until the population is full. The
    candidate of slot s draws from ``derive_stream(master_seed, round_index, s)`` and new ids are assigned in slot
    order from next_id.
    """
    population = list(survivors)
    candidate_id = next_id
    for j in range(cfg.fresh_per_round):
        slot = len(population)
        family = cfg.families[j % len(cfg.families)]
        population.append(sample_candidate(space, family, n_features,
                                           derive_stream(master_seed, round_index, slot), candidate_id))
        candidate_id += 1
    j = 0
    while len(population) < cfg.population:
        slot = len(population)
        parent = survivors[j % len(survivors)]
        population.append(mutate_candidate(parent, space, cfg.mutation,
                                           derive_stream(master_seed, round_index, slot), candidate_id))
        candidate_id += 1
        j += 1
    return population


def should_stop(history: Sequence[float], cfg: OptimizerConfig) -> bool:
    """
    :param history: best score so far after each executed round
    :return: True once ``cfg.rounds`` rounds ran, or when each of the last ``cfg.patience`` rounds improved the best
             score by less than ``cfg.min_delta``
    """
    if len(history) >= cfg.rounds:
        return True
    if cfg.patience is None or len(history) <= cfg.patience:
        return False
    recent = history[-(cfg.patience + 1):]
    return all(later - earlier < cfg.min_delta for earlier, later in zip(recent, recent[1:]))


class _Race:
    """
    Train and evaluate candidates; results are keyed by candidate id so the completion order never matters
    """

    def __init__(self, cfg: OptimizerConfig, train_ds: Dataset, valid_ds: Dataset, workers: Optional[int]):
        self._cfg = cfg
        self._train = train_ds
        self._valid = valid_ds
        self._workers = workers
        self._records: Dict[int, EvaluationRecord] = {}

    def _run_one(self, candidate: CandidateSpec) -> EvaluationRecord:
        model = train(candidate.family, candidate.params, self._train, candidate.mask,
                      training_stream(self._cfg.master_seed, candidate.id))
        record = evaluate(model, self._valid, self._cfg.metric, VALID, candidate.id)
        logger.debug('candidate %d (%s) scored %f', candidate.id, candidate.family.name, record.score)
        return record

    def score(self, population: Iterable[CandidateSpec]) -> List[EvaluationRecord]:
        population = sorted(population, key=lambda candidate: candidate.id)
        # carried survivors keep their record, training being deterministic
        pending = [candidate for candidate in population if candidate.id not in self._records]
        if self._workers == 1 or len(pending) < 2:
            results = [self._run_one(candidate) for candidate in pending]
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                results = list(executor.map(self._run_one, pending))
        for record in results:
            self._records[record.candidate_id] = record
        return [self._records[candidate.id] for candidate in population]


def run(cfg: OptimizerConfig, ds: Dataset, space: Optional[SearchSpace] = None, outputs: Sequence[Output] = (),
        workers: Optional[int] = None) -> Tuple[TrainedModel, RunReport]:
    """
    Race the portfolio on a dataset

    :param cfg: run configuration
    :param ds: full dataset, split internally into train / validation / test
    :param space: search space, the default one if None
    :param outputs: handlers receiving each ``GenerationResult`` as soon as its round ends
    :param workers: number of threads training candidates concurrently (None: one per core); never changes results
    :return: (winner refitted on train and validation rows, run report)
    """
    space = space if space is not None else SearchSpace.default()
    train_ds, valid_ds, test_ds = split_three_way(ds, cfg.split)
    logger.info('split %d rows into %d / %d / %d', ds.n_rows, train_ds.n_rows, valid_ds.n_rows, test_ds.n_rows)

    warnings = []
    if cfg.population < 2 * len(cfg.families):
        warnings.append(f'population {cfg.population} is lower than twice the {len(cfg.families)} families : '
                        f'families are assigned round-robin and some may be absent from round 0')
        logger.warning(warnings[-1])

    race = _Race(cfg, train_ds, valid_ds, workers)
    population = initial_population(cfg, space, ds.n_features)
    next_id = len(population)
    generations = []
    history = []
    best_so_far = 0.0
    round_index = 0
    while True:
        measure = Measurement(f'round {round_index}')
        with measure:
            records = race.score(population)
            survivor_ids = select_survivors(records, cfg.survivors)
            best_so_far = max(best_so_far, max(record.score for record in records))
        generation = GenerationResult(round_index, tuple(sorted(population, key=lambda c: c.id)), tuple(records),
                                      tuple(survivor_ids), best_so_far, measure.duration_ms)
        generations.append(generation)
        history.append(best_so_far)
        logger.info('round %d : best so far %f, survivors %s', round_index, best_so_far, survivor_ids)
        for output in outputs:
            output.add(generation)

        if should_stop(history, cfg):
            break
        round_index += 1
        survivors = [generation.candidate_of(candidate_id) for candidate_id in survivor_ids]
        population = next_generation(survivors, cfg, space, round_index, cfg.master_seed, next_id, ds.n_features)
        next_id += len(population) - len(survivors)

    last = generations[-1]
    winner = last.candidate_of(last.survivors[0])
    winner_score = last.record_of(winner.id).score
    model = train(winner.family, winner.params, merge(train_ds, valid_ds), winner.mask,
                  training_stream(cfg.master_seed, winner.id))
    final_test = evaluate(model, test_ds, cfg.metric, TEST, winner.id)
    logger.info('winner %d (%s) : validation %f, test %f', winner.id, winner.family.name, winner_score,
                final_test.score)
    return model, RunReport(cfg, tuple(generations), winner, winner_score, final_test, tuple(warnings))
