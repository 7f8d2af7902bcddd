# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import math

import pytest
from hypothesis import given, strategies as st

from pyRACE import ModelFamily, FeatureMask, RngStream, derive_stream
from pyRACE.search import ParamSpec, ParamKind, HyperparamAssignment, SearchSpace, CandidateSpec, MutationConfig
from pyRACE.search import sample_param, sample_candidate, mutate_candidate, mutate_mask
from pyRACE.exception import PyRACEInvalidParamSpecException, PyRACEUOutOfRangeException, PyRACEInvalidParentException
from pyRACE.exception import PyRACEUnknownFamilyException, PyRACEInfeasibleConfigException

UNIT = st.floats(min_value=0.0, max_value=1.0, exclude_max=True)


#########################
# PARAMETER DECLARATION #
#########################
@pytest.mark.parametrize('build', [
    lambda: ParamSpec.linear('x', 1.0, 1.0),
    lambda: ParamSpec.log('x', 0.0, 1.0),
    lambda: ParamSpec.integer('x', 0.5, 3),
    lambda: ParamSpec.categorical('x', 'only'),
])
def test_malformed_param_spec(build):
    with pytest.raises(PyRACEInvalidParamSpecException):
        build()


def test_sample_param_examples():
    assert sample_param(ParamSpec.log('lr', 1e-3, 1.0), 0.5) == pytest.approx(math.sqrt(1e-3))
    assert sample_param(ParamSpec.integer('k', 1, 25), 0.999) == 25
    assert sample_param(ParamSpec.integer('k', 1, 25), 0.0) == 1
    assert sample_param(ParamSpec.categorical('w', 'a', 'b', 'c'), 0.5) == 1
    assert sample_param(ParamSpec.linear('x', -1.0, 1.0), 0.25) == -0.5


@pytest.mark.parametrize('u', [-0.1, 1.0, 2.0])
def test_sample_param_out_of_range(u):
    with pytest.raises(PyRACEUOutOfRangeException):
        sample_param(ParamSpec.linear('x', 0.0, 1.0), u)


@pytest.mark.parametrize('spec', [
    ParamSpec.linear('x', -2.0, 3.0),
    ParamSpec.log('x', 1e-6, 1e-1),
    ParamSpec.integer('x', 1, 12),
    ParamSpec.categorical('x', 'a', 'b', 'c'),
], ids=lambda spec: spec.kind.name)
@given(u1=UNIT, u2=UNIT)
def test_sample_param_monotone_and_in_domain(spec, u1, u2):
    low, high = sorted((u1, u2))
    assert spec.contains(sample_param(spec, low))
    assert sample_param(spec, low) <= sample_param(spec, high)


@given(UNIT)
def test_unit_coordinate_round_trip(t):
    spec = ParamSpec.log('x', 1e-4, 10.0)
    assert spec.to_unit(spec.from_unit(t)) == pytest.approx(t, abs=1e-9)


##############
# ASSIGNMENT #
##############
def test_assignment_access():
    params = HyperparamAssignment((('k', 3), ('weighting', 1)))
    assert params['k'] == 3
    assert params.names() == ('k', 'weighting')
    assert params.as_dict() == {'k': 3, 'weighting': 1}
    assert 'k' in params and 'x' not in params
    with pytest.raises(KeyError):
        params['x']


################
# SEARCH SPACE #
################
def test_default_space_declarations():
    space = SearchSpace.default()
    assert [spec.name for spec in space.params_of(ModelFamily.LOGREG)] == ['learning_rate', 'l2', 'iters']
    assert [spec.kind for spec in space.params_of(ModelFamily.KNN)] == [ParamKind.INTEGER_RANGE, ParamKind.CATEGORICAL]
    assert space.params_of(ModelFamily.KNN)[1].options == ('uniform', 'inverse_distance')


def test_space_override():
    space = SearchSpace.default().override({'knn': {'k': {'lo': 1, 'hi': 9}}, 'logreg': {'l2': {'hi': 0.5}}})
    k = space.params_of(ModelFamily.KNN)[0]
    assert (k.lo, k.hi) == (1, 9)
    assert space.params_of(ModelFamily.LOGREG)[1].hi == 0.5
    assert SearchSpace.default().params_of(ModelFamily.KNN)[0].hi == 25


@pytest.mark.parametrize('overrides, exception', [
    ({'knn': {'depth': {'lo': 1}}}, PyRACEInvalidParamSpecException),
    ({'knn': {'k': {'lo': 30}}}, PyRACEInvalidParamSpecException),
    ({'knn': {'k': {'lo': 0}}}, PyRACEInvalidParamSpecException),
    ({'tree': {'min_leaf': {'lo': 2.5}}}, PyRACEInvalidParamSpecException),
    ({'logreg': {'iters': {'hi': 'many'}}}, PyRACEInvalidParamSpecException),
    ({'logreg': {'l2': {'lo': 0.0}}}, PyRACEInvalidParamSpecException),
    ({'knn': {'weighting': {'options': ['uniform', 'inverse_distance', 'gaussian']}}}, PyRACEInvalidParamSpecException),
    ({'svm': {}}, PyRACEUnknownFamilyException),
])
def test_bad_override(overrides, exception):
    with pytest.raises(exception):
        SearchSpace.default().override(overrides)


def test_conforms():
    space = SearchSpace.default()
    assert space.conforms(ModelFamily.TREE, HyperparamAssignment((('max_depth', 3), ('min_leaf', 1)))) is None
    assert space.conforms(ModelFamily.TREE, HyperparamAssignment((('max_depth', 13), ('min_leaf', 1)))) is not None
    assert space.conforms(ModelFamily.TREE, HyperparamAssignment((('min_leaf', 1), ('max_depth', 3)))) is not None
    assert space.conforms(ModelFamily.TREE, HyperparamAssignment((('max_depth', 3.0), ('min_leaf', 1)))) is not None


############
# SAMPLING #
############
@given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.sampled_from(list(ModelFamily)))
def test_sampled_candidate_conforms(seed, family):
    space = SearchSpace.default()
    candidate = sample_candidate(space, family, 5, RngStream(seed), 3)
    assert space.conforms(family, candidate.params) is None
    assert candidate.mask == FeatureMask.full(5)
    assert candidate.parent_id is None and candidate.id == 3


def test_sampling_is_reproducible():
    space = SearchSpace.default()
    first = sample_candidate(space, ModelFamily.LOGREG, 4, derive_stream(1, 0, 2), 2)
    again = sample_candidate(space, ModelFamily.LOGREG, 4, derive_stream(1, 0, 2), 2)
    assert first == again


############
# MUTATION #
############
def test_mutation_config_bounds():
    with pytest.raises(PyRACEInfeasibleConfigException):
        MutationConfig(sigma_cont=0.0)
    with pytest.raises(PyRACEInfeasibleConfigException):
        MutationConfig(p_flip=1.5)


@given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.integers(min_value=1, max_value=12))
def test_mutated_mask_never_empty(seed, n_features):
    mask = FeatureMask((True,) + (False,) * (n_features - 1))
    assert mutate_mask(mask, 1.0, RngStream(seed)).popcount >= 1


def test_full_flip_rescues_one_bit():
    """
    flip every bit of a one-feature mask

    Test if:
      - the single bit is set back
    """
    assert mutate_mask(FeatureMask((True,)), 1.0, RngStream(0)).included == (True,)


@given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.sampled_from(list(ModelFamily)))
def test_mutant_conforms_and_keeps_family(seed, family):
    space = SearchSpace.default()
    parent = sample_candidate(space, family, 6, RngStream(seed), 0)
    child = mutate_candidate(parent, space, MutationConfig(p_feature_search=1.0), RngStream(seed ^ 1), 9)
    assert child.family == family
    assert child.id == 9 and child.parent_id == 0
    assert space.conforms(family, child.params) is None
    assert child.mask.popcount >= 1


def test_mutation_without_feature_search_keeps_mask():
    space = SearchSpace.default()
    parent = CandidateSpec(0, ModelFamily.TREE, HyperparamAssignment((('max_depth', 3), ('min_leaf', 2))),
                           FeatureMask((True, False, True)))
    for seed in range(20):
        child = mutate_candidate(parent, space, MutationConfig(p_feature_search=0.0), RngStream(seed), 1)
        assert child.mask == parent.mask


def test_integer_mutation_step():
    """
    mutate max_depth (range 11) with sigma 0.15 using a known gaussian draw

    Test if:
      - the step is round-half-up(g * 11 * 0.15), clamped to [1, 12]
    """
    space = SearchSpace.default()
    parent = CandidateSpec(0, ModelFamily.TREE, HyperparamAssignment((('max_depth', 6), ('min_leaf', 5))),
                           FeatureMask((True,)))
    reference = RngStream(21)
    g_depth = reference.gaussian()
    g_leaf = reference.gaussian()
    child = mutate_candidate(parent, space, MutationConfig(), RngStream(21), 1)
    assert child.params['max_depth'] == min(max(6 + math.floor(g_depth * 11 * 0.15 + 0.5), 1), 12)
    assert child.params['min_leaf'] == min(max(5 + math.floor(g_leaf * 9 * 0.15 + 0.5), 1), 10)


def test_null_mutation_stays_local():
    """
    mutate a logistic regression candidate with a vanishing step, no categorical resampling and no feature search

    Test if:
      - every parameter stays within 1e-9 of the parent value
      - the mask is kept
    """
    space = SearchSpace.default()
    parent = CandidateSpec(3, ModelFamily.LOGREG,
                           HyperparamAssignment((('learning_rate', 0.05), ('l2', 1e-3), ('iters', 120))),
                           FeatureMask((True, False, True, True)))
    cfg = MutationConfig(sigma_cont=1e-12, p_cat=0.0, p_feature_search=0.0)
    for seed in range(10):
        child = mutate_candidate(parent, space, cfg, RngStream(seed), 4)
        for (_, before), (_, after) in zip(parent.params, child.params):
            assert after == pytest.approx(before, rel=0.0, abs=1e-9)
        assert child.mask == parent.mask


@given(st.lists(st.booleans(), min_size=1, max_size=12).filter(any), st.integers(min_value=0, max_value=2 ** 64 - 1))
def test_mask_without_flip_is_kept(bits, seed):
    mask = FeatureMask(tuple(bits))
    assert mutate_mask(mask, 0.0, RngStream(seed)) == mask


def test_mean_flip_count():
    """
    mutate a 10 bit mask 10000 times with p_flip = 0.1

    Test if:
      - the mean number of flipped bits per call lies in [0.9, 1.1]
    """
    mask = FeatureMask((True,) * 10)
    stream = RngStream(2024)
    flips = 0
    for _ in range(10000):
        child = mutate_mask(mask, 0.1, stream)
        flips += sum(before != after for before, after in zip(mask.included, child.included))
    assert 0.9 <= flips / 10000 <= 1.1


def test_mutation_draws_are_pinned():
    """
    mutate a tree candidate from RngStream(5), feature search forced, p_flip = 0.6

    Test if:
      - max_depth moves from 6 to 5 and min_leaf from 5 to 6
      - bits 1, 3 and 4 of the mask are flipped
    """
    space = SearchSpace.default()
    parent = CandidateSpec(0, ModelFamily.TREE, HyperparamAssignment((('max_depth', 6), ('min_leaf', 5))),
                           FeatureMask((True,) * 6))
    child = mutate_candidate(parent, space, MutationConfig(p_flip=0.6, p_feature_search=1.0), RngStream(5), 1)
    assert child.params.as_dict() == {'max_depth': 5, 'min_leaf': 6}
    assert str(child.mask) == '101001'


def test_mutating_invalid_parent():
    space = SearchSpace.default()
    parent = CandidateSpec(4, ModelFamily.KNN, HyperparamAssignment((('k', 99), ('weighting', 0))), FeatureMask((True,)))
    with pytest.raises(PyRACEInvalidParentException):
        mutate_candidate(parent, space, MutationConfig(), RngStream(0), 5)
