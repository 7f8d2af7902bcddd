# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import numpy as np
import pytest

from pyRACE import ModelFamily
from pyRACE.classifiers import nb_class_posterior, predict
from pyRACE.exception import PyRACEWrongFamilyException
from tests.utils import train_family, make_dataset


def test_priors_are_class_shares(blobs):
    model = train_family(ModelFamily.GAUSSIAN_NB, blobs.take(list(range(10)) + [11, 13]))
    # 5 rows of class a, 7 of class b
    assert model.payload.prior.tolist() == pytest.approx([5 / 12, 7 / 12])


def test_constant_feature_gets_a_positive_variance(tiny_dataset):
    model = train_family(ModelFamily.GAUSSIAN_NB, tiny_dataset)
    assert np.all(model.payload.var > 0)
    assert predict(model, [8.1, 0.1, 5.0]) == 2


def test_posterior_is_a_distribution(blobs):
    model = train_family(ModelFamily.GAUSSIAN_NB, blobs)
    generator = np.random.default_rng(0)
    for x in generator.normal(scale=3.0, size=(25, blobs.n_features)):
        posterior = nb_class_posterior(model, model.transform(x))
        assert posterior.sum() == pytest.approx(1.0, abs=1e-9)
        assert np.all(posterior >= 0)


def test_posterior_far_from_the_data(blobs):
    """
    Test if:
      - a point a thousand deviations away still gets a finite, normalised posterior
    """
    model = train_family(ModelFamily.GAUSSIAN_NB, blobs)
    posterior = nb_class_posterior(model, model.transform(np.full(blobs.n_features, 1000.0)))
    assert np.all(np.isfinite(posterior))
    assert posterior.sum() == pytest.approx(1.0)


def test_posterior_argmax_is_the_prediction(blobs):
    model = train_family(ModelFamily.GAUSSIAN_NB, blobs)
    for x in blobs.rows[:20]:
        assert int(np.argmax(nb_class_posterior(model, model.transform(x)))) == predict(model, x)


def test_posterior_of_another_family(blobs):
    model = train_family(ModelFamily.KNN, blobs)
    with pytest.raises(PyRACEWrongFamilyException):
        nb_class_posterior(model, model.transform(blobs.rows[0]))


def test_mirrored_classes_tie_at_the_midpoint():
    """
    two classes mirrored around 0, same spread

    Test if:
      - the posterior at 0 is exactly even
      - the tie goes to the lower class index
    """
    ds = make_dataset([[-1.5], [-0.5], [0.5], [1.5]], [0, 0, 1, 1])
    model = train_family(ModelFamily.GAUSSIAN_NB, ds)
    assert nb_class_posterior(model, model.transform([0.0])).tolist() == pytest.approx([0.5, 0.5], abs=1e-12)
    assert predict(model, [0.0]) == 0


def test_posterior_next_to_a_class():
    ds = make_dataset([[0.0], [0.1], [1.0], [1.1]], [0, 0, 1, 1], ('A', 'B'))
    model = train_family(ModelFamily.GAUSSIAN_NB, ds)
    assert nb_class_posterior(model, model.transform([0.02]))[0] > 0.99
