# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Model and report documents

Both are UTF-8 json documents with lexicographically sorted keys; reals are written with their shortest round-trip
representation, so saving a loaded model reproduces the original bytes.
"""
import json
import logging
import os
import tempfile
from typing import Any, Callable, Dict, List

from pyRACE.classifiers import GaussianNBPayload, KnnPayload, LogRegPayload, TreeNode, TreePayload
from pyRACE.classifiers import LearnerFactory, TrainedModel
from pyRACE.config import config_document
from pyRACE.dataset import FeatureMask, ScalerStats
from pyRACE.exception import PyRACEException, PyRACEIOException, PyRACEMissingFileException
from pyRACE.exception import PyRACESchemaException, PyRACEUnsupportedVersionException
from pyRACE.family import ModelFamily
from pyRACE.result import EvaluationRecord, GenerationResult, RunReport
from pyRACE.search import CandidateSpec, HyperparamAssignment

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
MODEL_KEYS = ('format_version', 'family', 'params', 'mask', 'feature_names', 'class_names', 'scaler', 'payload')


def canonical_json(document) -> str:
    return json.dumps(document, sort_keys=True, indent=1, ensure_ascii=False, allow_nan=False) + '\n'


def atomic_write(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.' + os.path.basename(path), suffix='.tmp')
    except OSError as exn:
        raise PyRACEIOException(path, f': {exn.strerror}')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as tmp_file:
            tmp_file.write(text)
        os.replace(tmp_path, path)
    except OSError as exn:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise PyRACEIOException(path, f': {exn.strerror}')


def _read_json(path: str):
    if not os.path.isfile(path):
        raise PyRACEMissingFileException(path)
    try:
        with open(path, encoding='utf-8') as json_file:
            return json.load(json_file)
    except OSError as exn:
        raise PyRACEIOException(path, f': {exn.strerror}')
    except ValueError as exn:
        raise PyRACEIOException(path, f': not a json document ({exn})')


#########
# MODEL #
#########
def _tree_document(node: TreeNode) -> Dict[str, Any]:
    document = {'n_samples': node.n_samples, 'label': node.label}
    if not node.is_leaf:
        document.update(feature=node.feature, threshold=node.threshold,
                        left=_tree_document(node.left), right=_tree_document(node.right))
    return document


def _tree_from_document(document: Dict[str, Any]) -> TreeNode:
    if 'feature' not in document:
        return TreeNode(int(document['n_samples']), int(document['label']))
    return TreeNode(int(document['n_samples']), int(document['label']), int(document['feature']),
                    float(document['threshold']),
                    _tree_from_document(document['left']), _tree_from_document(document['right']))


def _payload_document(model: TrainedModel) -> Dict[str, Any]:
    payload = model.payload
    if model.family == ModelFamily.LOGREG:
        return {'weights': payload.weights.tolist(), 'bias': payload.bias.tolist()}
    if model.family == ModelFamily.GAUSSIAN_NB:
        return {'prior': payload.prior.tolist(), 'mean': payload.mean.tolist(), 'var': payload.var.tolist()}
    if model.family == ModelFamily.KNN:
        return {'rows': payload.rows.tolist(), 'labels': payload.labels.tolist()}
    return {'root': _tree_document(payload.root)}


def _payload_from_document(family: ModelFamily, document: Dict[str, Any]):
    if family == ModelFamily.LOGREG:
        return LogRegPayload(document['weights'], document['bias'])
    if family == ModelFamily.GAUSSIAN_NB:
        return GaussianNBPayload(document['prior'], document['mean'], document['var'])
    if family == ModelFamily.KNN:
        return KnnPayload(document['rows'], document['labels'])
    return TreePayload(_tree_from_document(document['root']))


def model_document(model: TrainedModel) -> Dict[str, Any]:
    """
    :return: the version 1 model document of a trained model
    """
    return {
        'format_version': FORMAT_VERSION,
        'family': model.family.tag,
        'params': model.params.as_dict(),
        'mask': list(model.mask.included),
        'feature_names': list(model.feature_names),
        'class_names': list(model.class_names),
        'scaler': {'mean': model.scaler.mean.tolist(), 'sd': model.scaler.sd.tolist(),
                   'constant': model.scaler.constant.tolist()},
        'payload': _payload_document(model),
    }


def _field(document: Dict[str, Any], name: str, parse: Callable):
    if name not in document:
        raise PyRACESchemaException(name)
    try:
        return parse(document[name])
    except (KeyError, TypeError, ValueError, AttributeError, PyRACEException):
        raise PyRACESchemaException(name)


def _params_from_document(family: ModelFamily, values: Dict[str, Any]) -> HyperparamAssignment:
    learner = LearnerFactory.create_learner(family)
    params = HyperparamAssignment(tuple((name, values[name]) for name in learner.param_names))
    if set(values) != set(learner.param_names):
        raise ValueError('unexpected parameters')
    learner.validate(params)
    return params


def _names(values) -> tuple:
    if not isinstance(values, list) or not all(isinstance(name, str) for name in values):
        raise TypeError('a list of strings is expected')
    return tuple(values)


def model_from_document(document: Dict[str, Any]) -> TrainedModel:
    """
    :raise PyRACEUnsupportedVersionException: if the document wasn't written in format version 1
    :raise PyRACESchemaException: if a field is missing or malformed
    """
    if not isinstance(document, dict):
        raise PyRACESchemaException('format_version')
    version = _field(document, 'format_version', lambda value: value)
    if version != FORMAT_VERSION:
        raise PyRACEUnsupportedVersionException(version)

    family = _field(document, 'family', ModelFamily.from_tag)
    params = _field(document, 'params', lambda values: _params_from_document(family, values))
    mask = _field(document, 'mask', lambda bits: FeatureMask(tuple(_bits(bits))))
    feature_names = _field(document, 'feature_names', _names)
    class_names = _field(document, 'class_names', _names)
    scaler = _field(document, 'scaler', lambda values: ScalerStats(values['mean'], values['sd'], values['constant']))
    payload = _field(document, 'payload', lambda values: _payload_from_document(family, values))
    try:
        return TrainedModel(family, params, mask, scaler, payload, feature_names, class_names)
    except PyRACEException:
        raise PyRACESchemaException('payload')


def _bits(values) -> List[bool]:
    if not isinstance(values, list) or not all(isinstance(bit, bool) for bit in values):
        raise TypeError('a list of booleans is expected')
    return values


def save_model(model: TrainedModel, path: str):
    """
    Write a model document, atomically

    :raise PyRACEIOException: if the file can't be written, in which case no file is left behind
    """
    atomic_write(path, canonical_json(model_document(model)))
    logger.info('saved %s model to %s', model.family.name, path)


def load_model(path: str) -> TrainedModel:
    """
    :raise PyRACEMissingFileException: if the file doesn't exist
    :raise PyRACEIOException: if it can't be read or isn't json
    :raise PyRACEUnsupportedVersionException: if its format version isn't 1
    :raise PyRACESchemaException: if a field is missing or malformed
    """
    return model_from_document(_read_json(path))


##########
# REPORT #
##########
def candidate_document(candidate: CandidateSpec) -> Dict[str, Any]:
    return {
        'id': candidate.id,
        'family': candidate.family.tag,
        'params': candidate.params.as_dict(),
        'mask': str(candidate.mask),
        'parent_id': candidate.parent_id,
    }


def record_document(record: EvaluationRecord) -> Dict[str, Any]:
    return {
        'candidate_id': record.candidate_id,
        'split': record.split_name,
        'metric': record.metric.tag,
        'score': record.score,
        'n_examples': record.n_examples,
    }


def generation_document(generation: GenerationResult) -> Dict[str, Any]:
    return {
        'round': generation.round,
        'candidates': [candidate_document(candidate) for candidate in generation.candidates],
        'records': [record_document(record) for record in generation.records],
        'survivors': list(generation.survivors),
        'best_score_so_far': generation.best_score_so_far,
        'wall_time_ms': generation.wall_time_ms,
    }


def report_document(report: RunReport) -> Dict[str, Any]:
    winner = candidate_document(report.winner)
    winner['validation_score'] = report.winner_score
    return {
        'config': config_document(report.config),
        'rounds': [generation_document(generation) for generation in report.rounds],
        'winner': winner,
        'final_test': record_document(report.final_test),
        'warnings': list(report.warnings),
    }


def write_report(report: RunReport, path: str):
    """
    Write the audit trail of a run, atomically

    :raise PyRACEIOException: if the file can't be written
    """
    atomic_write(path, canonical_json(report_document(report)))
    logger.info('saved report of %d rounds to %s', len(report.rounds), path)


def read_report(path: str) -> Dict[str, Any]:
    """
    :return: the report document as plain json values
    :raise PyRACEMissingFileException: if the file doesn't exist
    :raise PyRACEIOException: if it can't be read or isn't json
    """
    return _read_json(path)
