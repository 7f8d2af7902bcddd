# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Run configuration layering: built-in defaults, then an optional json file, then command line flags

A configuration file is a json object whose keys are all optional::

    {
        "seed": 7, "rounds": 5, "population": 16, "survivors": 4, "fresh": 4,
        "families": ["logreg", "tree"], "metric": "macro_f1", "feature_search": true,
        "patience": 2, "min_delta": 0.001,
        "split": {"train": 0.6, "valid": 0.2, "test": 0.2, "seed": 7, "stratified": true},
        "mutation": {"sigma_cont": 0.15, "p_cat": 0.2, "p_flip": 0.1, "p_feature_search": 0.5},
        "search_space": {"knn": {"k": {"lo": 1, "hi": 9}}}
    }

The ``config`` section of a run report uses the same keys and can be fed back as a configuration file.
"""
import json
import logging
from dataclasses import replace
from typing import Any, Dict, Mapping, Optional, Tuple

from pyRACE.dataset import SplitSpec
from pyRACE.exception import PyRACEConfigFileException
from pyRACE.family import ModelFamily
from pyRACE.metric import Metric
from pyRACE.optimizer import OptimizerConfig
from pyRACE.search import MutationConfig, SearchSpace

logger = logging.getLogger(__name__)

# configuration key -> OptimizerConfig field
_SCALAR_FIELDS = {
    'seed': 'master_seed',
    'rounds': 'rounds',
    'population': 'population',
    'survivors': 'survivors',
    'fresh': 'fresh_per_round',
    'patience': 'patience',
    'min_delta': 'min_delta',
}
_SPLIT_FIELDS = {
    'train': 'train_fraction',
    'valid': 'valid_fraction',
    'test': 'test_fraction',
    'seed': 'seed',
    'stratified': 'stratified',
}
_MUTATION_FIELDS = ('sigma_cont', 'p_cat', 'p_flip', 'p_feature_search')
CONFIG_KEYS = tuple(_SCALAR_FIELDS) + ('families', 'metric', 'feature_search', 'split', 'mutation', 'search_space')

_INTEGER_KEYS = ('seed', 'rounds', 'population', 'survivors', 'fresh', 'patience')


def _is_integer(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_real(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_keys(source: str, values, allowed, section: str = ''):
    if not isinstance(values, dict):
        raise PyRACEConfigFileException(source, f'{section or "the document"} must be a json object')
    unknown = sorted(set(values) - set(allowed))
    if unknown:
        where = f' in {section}' if section else ''
        raise PyRACEConfigFileException(source, f'unknown keys{where} : {", ".join(unknown)}')


def check_config_values(values: Mapping[str, Any], source: str = '<config>'):
    """
    Check keys and value types of a configuration mapping

    :param source: name of the configuration source, used in error messages
    :raise PyRACEConfigFileException: on an unknown key or a value of the wrong type
    """
    _check_keys(source, values, CONFIG_KEYS)
    for key in _INTEGER_KEYS:
        if key in values and values[key] is not None and not _is_integer(values[key]):
            raise PyRACEConfigFileException(source, f'{key} must be an integer')
    if 'min_delta' in values and not _is_real(values['min_delta']):
        raise PyRACEConfigFileException(source, 'min_delta must be a number')
    if 'feature_search' in values and not isinstance(values['feature_search'], bool):
        raise PyRACEConfigFileException(source, 'feature_search must be true or false')
    if 'metric' in values and not isinstance(values['metric'], str):
        raise PyRACEConfigFileException(source, 'metric must be a string')
    if 'families' in values:
        families = values['families']
        if isinstance(families, str):
            families = families.split(',')
        if not isinstance(families, list) or not all(isinstance(tag, str) for tag in families):
            raise PyRACEConfigFileException(source, 'families must be a list of family names')
    if 'split' in values:
        _check_keys(source, values['split'], _SPLIT_FIELDS, 'split')
        for key, value in values['split'].items():
            if key == 'stratified':
                if not isinstance(value, bool):
                    raise PyRACEConfigFileException(source, 'split.stratified must be true or false')
            elif key == 'seed':
                if not _is_integer(value):
                    raise PyRACEConfigFileException(source, 'split.seed must be an integer')
            elif not _is_real(value):
                raise PyRACEConfigFileException(source, f'split.{key} must be a number')
    if 'mutation' in values:
        _check_keys(source, values['mutation'], _MUTATION_FIELDS, 'mutation')
        for key, value in values['mutation'].items():
            if not _is_real(value):
                raise PyRACEConfigFileException(source, f'mutation.{key} must be a number')
    if 'search_space' in values and not isinstance(values['search_space'], dict):
        raise PyRACEConfigFileException(source, 'search_space must be a json object')


def read_config_file(path: str) -> Dict[str, Any]:
    """
    :return: the checked content of a json configuration file
    :raise PyRACEConfigFileException: if the file is missing, isn't json or holds an unknown key
    """
    try:
        with open(path, encoding='utf-8') as config_file:
            values = json.load(config_file)
    except FileNotFoundError:
        raise PyRACEConfigFileException(path, 'no such file')
    except json.JSONDecodeError as exn:
        raise PyRACEConfigFileException(path, f'invalid json at line {exn.lineno} : {exn.msg}')
    except (OSError, UnicodeDecodeError) as exn:
        raise PyRACEConfigFileException(path, str(exn))
    check_config_values(values, path)
    logger.info('read configuration file %s', path)
    return values


def build_config(file_values: Optional[Mapping[str, Any]] = None,
                 **flags) -> Tuple[OptimizerConfig, SearchSpace]:
    """
    Merge configuration sources, a flag set to None is considered absent

    :param file_values: content of a configuration file
    :param flags: values given on the command line, under the configuration file keys
    :return: (optimizer configuration, search space)
    :raise PyRACEConfigException: if a value is unknown or the resulting configuration is infeasible
    """
    values = dict(file_values or {})
    values.update({key: value for key, value in flags.items() if value is not None})
    check_config_values(values)

    kwargs = {field: values[key] for key, field in _SCALAR_FIELDS.items() if key in values}
    if 'families' in values:
        tags = values['families']
        if isinstance(tags, str):
            tags = tags.split(',')
        kwargs['families'] = tuple(ModelFamily.from_tag(tag) for tag in tags if tag.strip())
    if 'metric' in values:
        kwargs['metric'] = Metric.from_tag(values['metric'])

    mutation = MutationConfig(**values.get('mutation', {}))
    if not values.get('feature_search', True):
        mutation = replace(mutation, p_feature_search=0.0)
    kwargs['mutation'] = mutation

    split_values = {_SPLIT_FIELDS[key]: value for key, value in values.get('split', {}).items()}
    # the row shuffle follows the master seed unless told otherwise
    split_values.setdefault('seed', values.get('seed', 0))
    kwargs['split'] = SplitSpec(**split_values)

    space = SearchSpace.default().override(values.get('search_space', {}))
    return OptimizerConfig(**kwargs), space


def config_document(cfg: OptimizerConfig) -> Dict[str, Any]:
    """
    Describe a configuration with the configuration file keys
    """
    return {
        'seed': cfg.master_seed,
        'rounds': cfg.rounds,
        'population': cfg.population,
        'survivors': cfg.survivors,
        'fresh': cfg.fresh_per_round,
        'families': [family.tag for family in cfg.families],
        'metric': cfg.metric.tag,
        'patience': cfg.patience,
        'min_delta': cfg.min_delta,
        'split': {key: getattr(cfg.split, field) for key, field in _SPLIT_FIELDS.items()},
        'mutation': {field: getattr(cfg.mutation, field) for field in _MUTATION_FIELDS},
    }
