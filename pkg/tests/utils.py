# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
import numpy as np
import pytest

from pyRACE import Dataset, FeatureMask, HyperparamAssignment, ModelFamily, training_stream
from pyRACE.classifiers import train

MASTER_SEED = 7

FAMILY_PARAMS = {
    ModelFamily.LOGREG: HyperparamAssignment((('learning_rate', 0.5), ('l2', 1e-4), ('iters', 100))),
    ModelFamily.GAUSSIAN_NB: HyperparamAssignment((('smoothing', 1e-9),)),
    ModelFamily.KNN: HyperparamAssignment((('k', 5), ('weighting', 1))),
    ModelFamily.TREE: HyperparamAssignment((('max_depth', 4), ('min_leaf', 2))),
}

MEMORIZING_PARAMS = HyperparamAssignment((('k', 1), ('weighting', 0)))


def make_dataset(rows, labels, class_names=None, feature_names=None) -> Dataset:
    rows = np.asarray(rows, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    if class_names is None:
        class_names = tuple(f'c{i}' for i in range(int(labels.max()) + 1))
    if feature_names is None:
        feature_names = tuple(f'f{j}' for j in range(rows.shape[1]))
    return Dataset(tuple(feature_names), rows, labels, tuple(class_names))


def gaussian_blobs(n_rows: int, seed: int, n_noise: int = 8, distance: float = 3.0) -> Dataset:
    """
    Two classes drawn from unit variance gaussians centered on (0, 0) and (distance, distance), followed by n_noise
    standard normal columns; rows alternate between the classes
    """
    generator = np.random.default_rng(seed)
    labels = np.arange(n_rows) % 2
    informative = generator.normal(size=(n_rows, 2)) + distance * labels[:, None]
    noise = generator.normal(size=(n_rows, n_noise))
    names = ('x0', 'x1') + tuple(f'noise{j}' for j in range(n_noise))
    return make_dataset(np.hstack([informative, noise]), labels, ('a', 'b'), names)


def noisy_xor(n_rows: int, seed: int, n_noise: int = 4, jitter: float = 0.2) -> Dataset:
    """
    Points jittered around the four quadrant centers (+-1, +-1), labelled by the parity of their quadrant
    """
    generator = np.random.default_rng(seed)
    quadrant = np.arange(n_rows) % 4
    signs = np.stack([np.where(quadrant % 2 == 0, 1.0, -1.0), np.where(quadrant < 2, 1.0, -1.0)], axis=1)
    informative = signs + generator.normal(scale=jitter, size=(n_rows, 2))
    labels = (signs[:, 0] * signs[:, 1] < 0).astype(np.int64)
    noise = generator.normal(size=(n_rows, n_noise))
    names = ('x0', 'x1') + tuple(f'noise{j}' for j in range(n_noise))
    return make_dataset(np.hstack([informative, noise]), labels, ('even', 'odd'), names)


def csv_text(ds: Dataset, label_column: str = 'label') -> str:
    """render a dataset in the csv dialect read by ``load_csv``, label column last"""
    lines = [','.join(ds.feature_names + (label_column,))]
    for row, label in zip(ds.rows, ds.labels):
        lines.append(','.join(repr(float(value)) for value in row) + ',' + ds.class_names[label])
    return '\n'.join(lines) + '\n'


def write_csv(path, ds: Dataset, label_column: str = 'label'):
    with open(path, 'w', encoding='utf-8') as csv_file:
        csv_file.write(csv_text(ds, label_column))


def train_family(family: ModelFamily, ds: Dataset, params=None, mask=None):
    params = FAMILY_PARAMS[family] if params is None else params
    mask = FeatureMask.full(ds.n_features) if mask is None else mask
    return train(family, params, ds, mask, training_stream(MASTER_SEED, 0))


@pytest.fixture
def blobs():
    """
    small separable dataset: 2 informative and 2 noise features, 120 rows
    """
    return gaussian_blobs(120, seed=1, n_noise=2)


@pytest.fixture
def tiny_dataset():
    """
    3 classes, 3 features (the last one constant), 9 rows
    """
    rows = [[0.0, 1.0, 5.0], [0.5, 1.5, 5.0], [0.2, 0.8, 5.0],
            [4.0, 4.0, 5.0], [4.5, 3.5, 5.0], [3.8, 4.2, 5.0],
            [8.0, 0.0, 5.0], [8.5, 0.5, 5.0], [7.9, -0.2, 5.0]]
    return make_dataset(rows, [0, 0, 0, 1, 1, 1, 2, 2, 2], ('low', 'mid', 'high'), ('u', 'v', 'w'))


@pytest.fixture(params=list(ModelFamily), ids=lambda family: family.name)
def family(request):
    """
    parametrize a test with every family of the portfolio
    """
    return request.param


@pytest.fixture
def blobs_csv(tmp_path):
    """
    write a 200 rows blobs dataset in a csv file, label column named 'y'
    """
    path = tmp_path / 'blobs.csv'
    write_csv(path, gaussian_blobs(200, seed=3, n_noise=2), 'y')
    return str(path)
