# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Candidate space: hyperparameter declarations, sampling and mutation of candidates and feature masks
"""
import math
from dataclasses import dataclass, field, replace
from enum import IntEnum
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from pyRACE.dataset import FeatureMask
from pyRACE.exception import PyRACEInvalidParamSpecException, PyRACEUnknownFamilyException
from pyRACE.exception import PyRACEUOutOfRangeException, PyRACEInvalidParentException, PyRACEInfeasibleConfigException
from pyRACE.family import ModelFamily, PORTFOLIO
from pyRACE.rng import RngStream

Number = Union[int, float]


class ParamKind(IntEnum):
    """
    Shape of a hyperparameter domain

    CONTINUOUS_LINEAR : real in [lo, hi], searched uniformly

    CONTINUOUS_LOG : real in [lo, hi], searched uniformly in log space

    INTEGER_RANGE : integer in [lo, hi]

    CATEGORICAL : index into a list of options
    """
    CONTINUOUS_LINEAR = 0
    CONTINUOUS_LOG = 1
    INTEGER_RANGE = 2
    CATEGORICAL = 3


@dataclass(frozen=True)
class ParamSpec:
    """
    Declaration of one hyperparameter

    :var name: hyperparameter name
    :var kind: domain shape
    :var lo: lower bound (numeric kinds)
    :var hi: upper bound (numeric kinds)
    :var options: option names (CATEGORICAL only)
    """

    name: str
    kind: ParamKind
    lo: float = 0.0
    hi: float = 0.0
    options: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'options', tuple(self.options))
        if self.kind == ParamKind.CATEGORICAL:
            if len(self.options) < 2:
                raise PyRACEInvalidParamSpecException(self.name, 'a categorical parameter needs at least 2 options')
            return
        if not self.lo < self.hi:
            raise PyRACEInvalidParamSpecException(self.name, 'lo must be lower than hi')
        if self.kind == ParamKind.CONTINUOUS_LOG and self.lo <= 0:
            raise PyRACEInvalidParamSpecException(self.name, 'a log scaled parameter needs lo > 0')
        if self.kind == ParamKind.INTEGER_RANGE and (self.lo != int(self.lo) or self.hi != int(self.hi)):
            raise PyRACEInvalidParamSpecException(self.name, 'integer bounds are required')

    @classmethod
    def linear(cls, name: str, lo: float, hi: float) -> 'ParamSpec':
        return cls(name, ParamKind.CONTINUOUS_LINEAR, float(lo), float(hi))

    @classmethod
    def log(cls, name: str, lo: float, hi: float) -> 'ParamSpec':
        return cls(name, ParamKind.CONTINUOUS_LOG, float(lo), float(hi))

    @classmethod
    def integer(cls, name: str, lo: int, hi: int) -> 'ParamSpec':
        return cls(name, ParamKind.INTEGER_RANGE, lo, hi)

    @classmethod
    def categorical(cls, name: str, *options: str) -> 'ParamSpec':
        return cls(name, ParamKind.CATEGORICAL, options=options)

    def contains(self, value: Number) -> bool:
        """True if value has the right type and lies within the declared bounds"""
        if self.kind == ParamKind.CATEGORICAL:
            return isinstance(value, int) and 0 <= value < len(self.options)
        if self.kind == ParamKind.INTEGER_RANGE:
            return isinstance(value, int) and self.lo <= value <= self.hi
        return isinstance(value, float) and self.lo <= value <= self.hi

    def to_unit(self, value: float) -> float:
        """position of a continuous value in the transformed [0, 1] coordinate"""
        if self.kind == ParamKind.CONTINUOUS_LOG:
            return (math.log(value) - math.log(self.lo)) / (math.log(self.hi) - math.log(self.lo))
        return (value - self.lo) / (self.hi - self.lo)

    def from_unit(self, t: float) -> float:
        """inverse of ``to_unit``, clamped to the bounds"""
        if self.kind == ParamKind.CONTINUOUS_LOG:
            value = math.exp(math.log(self.lo) + t * (math.log(self.hi) - math.log(self.lo)))
        else:
            value = self.lo + t * (self.hi - self.lo)
        return min(max(value, self.lo), self.hi)


@dataclass(frozen=True)
class HyperparamAssignment:
    """
    Ordered (name, value) pairs; reals for continuous kinds, ints for integer and categorical kinds
    """

    values: Tuple[Tuple[str, Number], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple((str(name), value) for name, value in self.values))

    def __getitem__(self, name: str) -> Number:
        for key, value in self.values:
            if key == name:
                return value
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(key == name for key, _ in self.values)

    def __iter__(self) -> Iterator[Tuple[str, Number]]:
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.values)

    def as_dict(self) -> Dict[str, Number]:
        return dict(self.values)


def _default_spaces() -> Dict[ModelFamily, Tuple[ParamSpec, ...]]:
    return {
        ModelFamily.LOGREG: (ParamSpec.log('learning_rate', 1e-3, 1e0),
                             ParamSpec.log('l2', 1e-6, 1e-1),
                             ParamSpec.integer('iters', 50, 500)),
        ModelFamily.GAUSSIAN_NB: (ParamSpec.log('smoothing', 1e-9, 1e-3),),
        ModelFamily.KNN: (ParamSpec.integer('k', 1, 25),
                          ParamSpec.categorical('weighting', 'uniform', 'inverse_distance')),
        ModelFamily.TREE: (ParamSpec.integer('max_depth', 1, 12),
                           ParamSpec.integer('min_leaf', 1, 10)),
    }


def _overridden(spec: ParamSpec, bounds: Mapping) -> ParamSpec:
    if spec.kind == ParamKind.CATEGORICAL:
        options = bounds.get('options', spec.options)
        if not isinstance(options, (list, tuple)):
            raise PyRACEInvalidParamSpecException(spec.name, 'options must be a list')
        options = tuple(str(option) for option in options)
        if len(options) != len(spec.options):
            raise PyRACEInvalidParamSpecException(spec.name, f'{len(spec.options)} options are required')
        return replace(spec, options=options)

    lo, hi = bounds.get('lo', spec.lo), bounds.get('hi', spec.hi)
    if any(isinstance(value, bool) or not isinstance(value, (int, float)) for value in (lo, hi)):
        raise PyRACEInvalidParamSpecException(spec.name, 'bounds must be numbers')
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise PyRACEInvalidParamSpecException(spec.name, 'bounds must be finite')
    if spec.kind == ParamKind.INTEGER_RANGE:
        if lo != int(lo) or hi != int(hi):
            raise PyRACEInvalidParamSpecException(spec.name, 'integer bounds are required')
        if lo < 1:
            raise PyRACEInvalidParamSpecException(spec.name, 'an integer parameter needs lo >= 1')
        return replace(spec, lo=int(lo), hi=int(hi))
    return replace(spec, lo=float(lo), hi=float(hi))


@dataclass(frozen=True)
class SearchSpace:
    """
    Per family ordered list of hyperparameter declarations

    :var families: mapping from model family to its parameter declarations
    """

    families: Mapping[ModelFamily, Tuple[ParamSpec, ...]] = field(default_factory=_default_spaces)

    def __post_init__(self):
        for family in PORTFOLIO:
            if family not in self.families:
                raise PyRACEUnknownFamilyException(family)
        for family, specs in self.families.items():
            names = [spec.name for spec in specs]
            if len(set(names)) != len(names):
                raise PyRACEInvalidParamSpecException(family.name, 'parameter names must be unique')

    @classmethod
    def default(cls) -> 'SearchSpace':
        return cls()

    def params_of(self, family: ModelFamily) -> Tuple[ParamSpec, ...]:
        """
        :raise PyRACEUnknownFamilyException: if the family has no declared space
        """
        try:
            return self.families[family]
        except KeyError:
            raise PyRACEUnknownFamilyException(family)

    def override(self, overrides: Mapping[str, Mapping[str, Mapping]]) -> 'SearchSpace':
        """
        Replace the bounds or the options of declared parameters

        Integer parameters count iterations, neighbours, depth or rows, their lower bound stays at 1 or above. A
        categorical parameter keeps its number of options.

        :param overrides: ``{family tag: {param name: {"lo": .., "hi": ..} or {"options": [..]}}}``
        :return: a new search space
        :raise PyRACEInvalidParamSpecException: if a parameter is unknown or the new declaration is malformed
        """
        families = dict(self.families)
        for tag, params in overrides.items():
            family = ModelFamily.from_tag(tag)
            specs = list(families[family])
            names = [spec.name for spec in specs]
            for name, bounds in params.items():
                if name not in names:
                    raise PyRACEInvalidParamSpecException(name, f'not a parameter of {family.name}')
                unknown = set(bounds) - {'lo', 'hi', 'options'}
                if unknown:
                    raise PyRACEInvalidParamSpecException(name, f'unknown keys {sorted(unknown)}')
                index = names.index(name)
                specs[index] = _overridden(specs[index], bounds)
            families[family] = tuple(specs)
        return SearchSpace(families)

    def conforms(self, family: ModelFamily, params: HyperparamAssignment) -> Optional[str]:
        """
        :return: None if params fit the family space, otherwise the reason they don't
        """
        specs = self.params_of(family)
        if params.names() != tuple(spec.name for spec in specs):
            return f'expected parameters {[spec.name for spec in specs]}, found {list(params.names())}'
        for spec, (_, value) in zip(specs, params):
            if not spec.contains(value):
                return f'{spec.name}={value!r} is out of its declared domain'
        return None


@dataclass(frozen=True)
class CandidateSpec:
    """
    One point of the search space competing in a round

    :var id: identifier, unique within a run
    :var family: model family
    :var params: hyperparameter assignment
    :var mask: features the candidate is trained on
    :var parent_id: id of the candidate it was mutated from, None for sampled candidates
    """

    id: int
    family: ModelFamily
    params: HyperparamAssignment
    mask: FeatureMask
    parent_id: Optional[int] = None


@dataclass(frozen=True)
class MutationConfig:
    """
    Step sizes of the mutation operator

    :var sigma_cont: standard deviation of the gaussian step in the transformed [0, 1] coordinate
    :var p_cat: probability to resample each categorical parameter
    :var p_flip: probability to flip each bit of a mask being mutated
    :var p_feature_search: probability that a mutation touches the mask at all
    """

    sigma_cont: float = 0.15
    p_cat: float = 0.2
    p_flip: float = 0.1
    p_feature_search: float = 0.5

    def __post_init__(self):
        if not self.sigma_cont > 0:
            raise PyRACEInfeasibleConfigException('sigma_cont must be positive')
        for name in ('p_cat', 'p_flip', 'p_feature_search'):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise PyRACEInfeasibleConfigException(f'{name} must lie in [0, 1]')


def sample_param(spec: ParamSpec, u: float) -> Number:
    """
    Map a uniform draw to a value of the declared domain

    :param u: uniform draw in [0, 1)
    :raise PyRACEUOutOfRangeException: if u isn't in [0, 1)
    """
    if not 0.0 <= u < 1.0:
        raise PyRACEUOutOfRangeException(u)
    if spec.kind in (ParamKind.CONTINUOUS_LINEAR, ParamKind.CONTINUOUS_LOG):
        # from_unit clamps: exp(log(lo)) may land one ulp outside the bounds
        return spec.from_unit(u)
    if spec.kind == ParamKind.INTEGER_RANGE:
        lo, hi = int(spec.lo), int(spec.hi)
        return min(lo + int(math.floor(u * (hi - lo + 1))), hi)
    return min(int(math.floor(u * len(spec.options))), len(spec.options) - 1)


def sample_candidate(space: SearchSpace, family: ModelFamily, n_features: int, stream: RngStream,
                     candidate_id: int) -> CandidateSpec:
    """
    Draw a fresh candidate, parameters in declaration order, every feature included

    :raise PyRACEUnknownFamilyException: if the family has no declared space
    """
    specs = space.params_of(family)
    params = HyperparamAssignment(tuple((spec.name, sample_param(spec, stream.uniform())) for spec in specs))
    return CandidateSpec(candidate_id, family, params, FeatureMask.full(n_features))


def mutate_mask(mask: FeatureMask, p_flip: float, stream: RngStream) -> FeatureMask:
    """
    Flip each bit with probability p_flip; if no bit survives, one uniformly chosen bit is set
    """
    bits = [bit != (stream.uniform() < p_flip) for bit in mask.included]
    if not any(bits):
        bits[stream.below(len(bits))] = True
    return FeatureMask(tuple(bits))


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def _mutate_param(spec: ParamSpec, value: Number, cfg: MutationConfig, stream: RngStream) -> Number:
    if spec.kind == ParamKind.CATEGORICAL:
        # both draws are always consumed
        resample = stream.uniform() < cfg.p_cat
        u = stream.uniform()
        return sample_param(spec, u) if resample else value
    step = stream.gaussian()
    if spec.kind == ParamKind.INTEGER_RANGE:
        lo, hi = int(spec.lo), int(spec.hi)
        return min(max(value + _round_half_up(step * (hi - lo) * cfg.sigma_cont), lo), hi)
    t = min(max(spec.to_unit(value) + cfg.sigma_cont * step, 0.0), 1.0)
    return spec.from_unit(t)


def mutate_candidate(parent: CandidateSpec, space: SearchSpace, cfg: MutationConfig, stream: RngStream,
                     new_id: int) -> CandidateSpec:
    """
    Perturb the parameters of a candidate and, with probability ``cfg.p_feature_search``, its feature mask

    The family is kept. Continuous parameters take a gaussian step in their transformed coordinate, integer parameters
    a rounded step proportional to their range, categorical parameters are resampled with probability ``cfg.p_cat``.
    Every value is clamped to its bounds.

    :raise PyRACEInvalidParentException: if the parent doesn't conform to the space
    """
    reason = space.conforms(parent.family, parent.params)
    if reason is not None:
        raise PyRACEInvalidParentException(parent.id, reason)

    specs = space.params_of(parent.family)
    params = HyperparamAssignment(tuple((spec.name, _mutate_param(spec, value, cfg, stream))
                                        for spec, (_, value) in zip(specs, parent.params)))
    mask = parent.mask
    if stream.uniform() < cfg.p_feature_search:
        mask = mutate_mask(mask, cfg.p_flip, stream)
    return CandidateSpec(new_id, parent.family, params, mask, parent_id=parent.id)
