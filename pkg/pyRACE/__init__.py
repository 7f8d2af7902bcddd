# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
from pyRACE.exception import PyRACEException, PyRACEDataException, PyRACEConfigException
from pyRACE.family import ModelFamily, PORTFOLIO
from pyRACE.metric import Metric
from pyRACE.rng import RngStream, SplitMix64, derive_stream, training_stream
from pyRACE.dataset import Dataset, FeatureMask, SplitSpec, ScalerStats, load_csv, load_features, split_three_way
from pyRACE.search import ParamKind, ParamSpec, HyperparamAssignment, SearchSpace, CandidateSpec, MutationConfig
from pyRACE.classifiers import TrainedModel, train, predict, predict_many
from pyRACE.result import EvaluationRecord, GenerationResult, RunReport
from pyRACE.evaluator import ConfusionMatrix, evaluate
from pyRACE.measurement import Measurement
from pyRACE.optimizer import OptimizerConfig, run
from pyRACE.config import build_config, read_config_file
from pyRACE.persistence import save_model, load_model, write_report, read_report

__version__ = "0.1.0"
