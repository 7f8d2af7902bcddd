# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import json
import os

import pytest
import pyfakefs
from mock import patch

from pyRACE import FeatureMask, ModelFamily, OptimizerConfig, predict_many, run
from pyRACE.persistence import save_model, load_model, write_report, read_report, MODEL_KEYS
from pyRACE.exception import PyRACEUnsupportedVersionException, PyRACESchemaException, PyRACEIOException
from pyRACE.exception import PyRACEMissingFileException
from tests.utils import train_family, gaussian_blobs


def model_json(model, fs, path='/models/model.json'):
    fs.create_dir(os.path.dirname(path))
    save_model(model, path)
    with open(path, encoding='utf-8') as model_file:
        return json.load(model_file)


def test_round_trip(fs, blobs, family):
    """
    save then load a model of every family

    Test if:
      - the loaded model predicts exactly like the saved one
      - saving the loaded model reproduces the same bytes
    """
    model = train_family(family, blobs, mask=FeatureMask((True, True, False, True)))
    fs.create_dir('/models')
    save_model(model, '/models/first.json')
    loaded = load_model('/models/first.json')
    assert predict_many(loaded, blobs.rows) == predict_many(model, blobs.rows)
    assert loaded.mask == model.mask and loaded.params == model.params

    save_model(loaded, '/models/second.json')
    with open('/models/first.json', 'rb') as first, open('/models/second.json', 'rb') as second:
        assert first.read() == second.read()


def test_document_layout(fs, blobs):
    document = model_json(train_family(ModelFamily.KNN, blobs), fs)
    assert sorted(document) == sorted(MODEL_KEYS)
    assert document['format_version'] == 1
    assert document['family'] == 'knn'
    assert document['params'] == {'k': 5, 'weighting': 1}
    assert document['mask'] == [True, True, True, True]
    assert document['class_names'] == ['a', 'b']


def test_document_is_canonical(fs, blobs):
    model = train_family(ModelFamily.TREE, blobs)
    fs.create_dir('/models')
    save_model(model, '/models/tree.json')
    with open('/models/tree.json', encoding='utf-8') as model_file:
        text = model_file.read()
    assert text.endswith('\n')
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=1, ensure_ascii=False) + '\n'


def write_document(fs, document, path='/models/edited.json'):
    fs.create_file(path, contents=json.dumps(document))
    return path


def test_unsupported_version(fs, blobs):
    document = model_json(train_family(ModelFamily.GAUSSIAN_NB, blobs), fs)
    document['format_version'] = 2
    with pytest.raises(PyRACEUnsupportedVersionException):
        load_model(write_document(fs, document))


@pytest.mark.parametrize('edit, field', [
    (lambda document: document.pop('mask'), 'mask'),
    (lambda document: document.update(mask='1111'), 'mask'),
    (lambda document: document.update(mask=[False, False, False, False]), 'mask'),
    (lambda document: document.update(family='svm'), 'family'),
    (lambda document: document['params'].pop('k'), 'params'),
    (lambda document: document['params'].update(k=0), 'params'),
    (lambda document: document.pop('scaler'), 'scaler'),
    (lambda document: document['payload'].pop('labels'), 'payload'),
    (lambda document: document.update(class_names='a,b'), 'class_names'),
])
def test_schema_errors(fs, blobs, edit, field):
    document = model_json(train_family(ModelFamily.KNN, blobs), fs)
    edit(document)
    with pytest.raises(PyRACESchemaException) as excinfo:
        load_model(write_document(fs, document))
    assert excinfo.value.field == field


def test_inconsistent_payload(fs, blobs):
    document = model_json(train_family(ModelFamily.LOGREG, blobs), fs)
    document['payload']['bias'] = [0.0, 0.0, 0.0]
    with pytest.raises(PyRACESchemaException):
        load_model(write_document(fs, document))


def test_missing_model_file(fs):
    with pytest.raises(PyRACEMissingFileException):
        load_model('/models/absent.json')


def test_not_json(fs):
    fs.create_file('/models/broken.json', contents='{"format_version": 1,')
    with pytest.raises(PyRACEIOException):
        load_model('/models/broken.json')


def test_save_in_missing_directory(fs, blobs):
    with pytest.raises(PyRACEIOException):
        save_model(train_family(ModelFamily.TREE, blobs), '/nowhere/model.json')
    assert not os.path.exists('/nowhere')


def test_failed_write_leaves_no_file(tmp_path, blobs):
    """
    make the final rename fail

    Test if:
      - a PyRACEIOException is raised
      - neither the target nor the temporary file is left in the directory
    """
    model = train_family(ModelFamily.TREE, blobs)
    with patch('pyRACE.persistence.os.replace', side_effect=OSError(28, 'No space left on device')):
        with pytest.raises(PyRACEIOException):
            save_model(model, str(tmp_path / 'model.json'))
    assert os.listdir(str(tmp_path)) == []


def test_report(tmp_path):
    cfg = OptimizerConfig(master_seed=2, rounds=2, population=4, survivors=2, fresh_per_round=1,
                          families=(ModelFamily.GAUSSIAN_NB, ModelFamily.TREE))
    _, report = run(cfg, gaussian_blobs(80, seed=6, n_noise=1), workers=1)
    path = str(tmp_path / 'report.json')
    write_report(report, path)
    document = read_report(path)

    assert sorted(document) == ['config', 'final_test', 'rounds', 'warnings', 'winner']
    assert document['config']['seed'] == 2
    assert [generation['round'] for generation in document['rounds']] == [0, 1]
    first = document['rounds'][0]
    assert sorted(first) == ['best_score_so_far', 'candidates', 'records', 'survivors', 'wall_time_ms']
    assert sorted(first['records'][0]) == ['candidate_id', 'metric', 'n_examples', 'score', 'split']
    assert first['candidates'][0]['mask'] == '111'
    assert document['winner']['id'] == report.winner.id
    assert document['winner']['validation_score'] == report.winner_score
    assert document['final_test']['split'] == 'test'
    assert document['warnings'] == []
