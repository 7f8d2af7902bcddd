# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import os

import pytest
import pyfakefs

from pyRACE import CandidateSpec, FeatureMask, HyperparamAssignment, Metric, ModelFamily
from pyRACE.outputs import CSVOutput
from pyRACE.result import EvaluationRecord, GenerationResult

HEADER = 'round,candidate_id,family,parent_id,mask,metric,score,survivor\n'


@pytest.fixture
def generations():
    """
    two rounds of two candidates, candidate 2 is a child of candidate 0
    """
    params = HyperparamAssignment((('max_depth', 3), ('min_leaf', 2)))
    first = GenerationResult(0, (CandidateSpec(0, ModelFamily.TREE, params, FeatureMask((True, True))),
                                 CandidateSpec(1, ModelFamily.TREE, params, FeatureMask((True, True)))),
                             (EvaluationRecord(0, 'valid', Metric.ACCURACY, 0.75, 8),
                              EvaluationRecord(1, 'valid', Metric.ACCURACY, 0.5, 8)), (0,), 0.75)
    second = GenerationResult(1, (CandidateSpec(0, ModelFamily.TREE, params, FeatureMask((True, True))),
                                  CandidateSpec(2, ModelFamily.TREE, params, FeatureMask((False, True)), 0)),
                              (EvaluationRecord(0, 'valid', Metric.ACCURACY, 0.75, 8),
                               EvaluationRecord(2, 'valid', Metric.ACCURACY, 0.875, 8)), (2,), 0.875)
    return [first, second]


FIRST_LINES = ['0,0,TREE,,11,accuracy,0.75,1\n', '0,1,TREE,,11,accuracy,0.5,0\n']
SECOND_LINES = ['1,0,TREE,,11,accuracy,0.75,0\n', '1,2,TREE,0,01,accuracy,0.875,1\n']


def test_add_2_rounds_in_empty_file(fs, generations):
    """
    Use a CSVOutput instance to write 2 rounds in an empty csv file named 'records.csv'

    Test if:
      - Before calling the save method, the csv file contains only the header
      - After calling the save method, the csv file contains one line per evaluation record
    """
    output = CSVOutput('records.csv')
    for generation in generations:
        output.add(generation)

    assert os.path.exists('records.csv')
    csv_file = open('records.csv', 'r')
    assert csv_file.readline() == HEADER
    assert csv_file.readline() == ''

    output.save()
    for line in FIRST_LINES + SECOND_LINES:
        assert csv_file.readline() == line
    assert csv_file.readline() == ''
    csv_file.close()


def test_add_round_in_non_empty_file(fs, generations):
    fs.create_file('records.csv', contents=HEADER + '9,9,KNN,,1,accuracy,0.1,0\n')
    output = CSVOutput('records.csv')
    output.add(generations[0])
    output.save()

    with open('records.csv', 'r') as csv_file:
        assert csv_file.readlines() == [HEADER, '9,9,KNN,,1,accuracy,0.1,0\n'] + FIRST_LINES


def test_add_round_in_non_empty_file_non_append(fs, generations):
    fs.create_file('records.csv', contents=HEADER + '9,9,KNN,,1,accuracy,0.1,0\n')
    output = CSVOutput('records.csv', append=False)
    output.add(generations[0])
    output.save()

    with open('records.csv', 'r') as csv_file:
        assert csv_file.readlines() == [HEADER] + FIRST_LINES


def test_two_save_call(fs, generations):
    """
    save after each round

    Test if:
      - the buffer is flushed by the first save, so the second one writes only the second round
    """
    output = CSVOutput('records.csv')
    output.add(generations[0])
    output.save()
    assert output.buffer == []
    output.add(generations[1])
    output.save()

    with open('records.csv', 'r') as csv_file:
        assert csv_file.readlines() == [HEADER] + FIRST_LINES + SECOND_LINES


def test_semicolon_separator(fs, generations):
    output = CSVOutput('records.csv', separator=';')
    output.add(generations[1])
    output.save()

    with open('records.csv', 'r') as csv_file:
        assert csv_file.readlines() == [HEADER.replace(',', ';')] + [line.replace(',', ';') for line in SECOND_LINES]
