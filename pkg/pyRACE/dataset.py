# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Tabular feature data: loading, validation, splitting, projection and standardization
"""
import csv
import logging
import os
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas

from pyRACE.exception import PyRACEMissingFileException, PyRACEMissingColumnException, PyRACEParseException
from pyRACE.exception import PyRACEEmptyDatasetException, PyRACESingleClassException, PyRACEInvalidDatasetException
from pyRACE.exception import PyRACETooFewRowsException, PyRACEStratificationImpossibleException
from pyRACE.exception import PyRACELengthMismatchException, PyRACEEmptyMaskException, PyRACEArityMismatchException
from pyRACE.exception import PyRACEColumnMismatchException, PyRACEDegenerateDataException
from pyRACE.exception import PyRACEInfeasibleConfigException, PyRACENoFeatureException
from pyRACE.rng import RngStream

logger = logging.getLogger(__name__)

FRACTION_TOLERANCE = 1e-9


def _frozen_array(values, dtype) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Tabular feature matrix with integer coded class labels

    :var feature_names: ordered column names
    :vartype feature_names: Tuple[str, ...]
    :var rows: (n_rows, n_features) float64 matrix, read only
    :vartype rows: numpy.ndarray
    :var labels: (n_rows,) class indices, read only
    :vartype labels: numpy.ndarray
    :var class_names: class label strings, the index of a name is its class code
    :vartype class_names: Tuple[str, ...]
    """

    feature_names: Tuple[str, ...]
    rows: np.ndarray
    labels: np.ndarray
    class_names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'feature_names', tuple(self.feature_names))
        object.__setattr__(self, 'class_names', tuple(self.class_names))
        rows = _frozen_array(self.rows, np.float64)
        if rows.ndim == 1 and rows.size == 0:
            rows = rows.reshape(0, len(self.feature_names))
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, 'labels', _frozen_array(self.labels, np.int64))

        if rows.ndim != 2 or rows.shape[1] != len(self.feature_names):
            raise PyRACEInvalidDatasetException('every row must hold one value per feature')
        if rows.shape[0] < 1:
            raise PyRACEInvalidDatasetException('a dataset holds at least one row')
        if self.labels.shape != (rows.shape[0],):
            raise PyRACEInvalidDatasetException('one label per row is required')
        if not np.all(np.isfinite(rows)):
            raise PyRACEInvalidDatasetException('feature values must be finite')
        if np.any(self.labels < 0) or np.any(self.labels >= len(self.class_names)):
            raise PyRACEInvalidDatasetException('label index out of the class range')

    @property
    def n_rows(self) -> int:
        return self.rows.shape[0]

    @property
    def n_features(self) -> int:
        return len(self.feature_names)

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    def take(self, indices: Sequence[int]) -> 'Dataset':
        """
        :param indices: row indices to keep, in output order
        :return: a dataset holding only the given rows
        """
        indices = np.asarray(indices, dtype=np.int64)
        return Dataset(self.feature_names, self.rows[indices], self.labels[indices], self.class_names)

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_classes)


def check_class_coverage(ds: Dataset):
    """
    :raise PyRACEDegenerateDataException: if a class of ``ds.class_names`` has no row
    """
    counts = ds.class_counts()
    for class_index, count in enumerate(counts):
        if count == 0:
            raise PyRACEDegenerateDataException(f'class {ds.class_names[class_index]} has no row')


@dataclass(frozen=True)
class FeatureMask:
    """
    Bit vector choosing the feature columns a model sees

    :var included: one boolean per feature column, at least one of them True
    :vartype included: Tuple[bool, ...]
    """

    included: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, 'included', tuple(bool(bit) for bit in self.included))
        if not any(self.included):
            raise PyRACEEmptyMaskException()

    @classmethod
    def full(cls, n_features: int) -> 'FeatureMask':
        return cls((True,) * n_features)

    def __len__(self):
        return len(self.included)

    @property
    def indices(self) -> List[int]:
        """indices of the included columns, in increasing order"""
        return [i for i, bit in enumerate(self.included) if bit]

    @property
    def popcount(self) -> int:
        return sum(self.included)

    def __str__(self):
        return ''.join('1' if bit else '0' for bit in self.included)


@dataclass(frozen=True)
class SplitSpec:
    """
    Proportions of the train / validation / test partition

    :var train_fraction: share of rows used to train candidates
    :var valid_fraction: share of rows used to select candidates
    :var test_fraction: share of rows evaluated once on the winner
    :var seed: seed of the row shuffle
    :var stratified: if True, every class is split with the same proportions
    """

    train_fraction: float = 0.6
    valid_fraction: float = 0.2
    test_fraction: float = 0.2
    seed: int = 0
    stratified: bool = True

    def __post_init__(self):
        fractions = (self.train_fraction, self.valid_fraction, self.test_fraction)
        if any(not 0.0 < f < 1.0 for f in fractions):
            raise PyRACEInfeasibleConfigException('split fractions must lie in (0, 1)')
        if abs(sum(fractions) - 1.0) > FRACTION_TOLERANCE:
            raise PyRACEInfeasibleConfigException('split fractions must sum to 1')
        if not 0 <= self.seed < 2 ** 64:
            raise PyRACEInfeasibleConfigException('split seed must be a 64-bit unsigned integer')


@dataclass(frozen=True, eq=False)
class ScalerStats:
    """
    Per feature mean and population standard deviation

    :var mean: (n_features,) feature means
    :var sd: (n_features,) standard deviations, 0 for constant features
    :var constant: (n_features,) True where the feature holds a single value
    """

    mean: np.ndarray
    sd: np.ndarray
    constant: np.ndarray = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'mean', _frozen_array(self.mean, np.float64))
        object.__setattr__(self, 'sd', _frozen_array(self.sd, np.float64))
        constant = self.sd == 0.0 if self.constant is None else self.constant
        object.__setattr__(self, 'constant', _frozen_array(constant, bool))
        if not (self.mean.shape == self.sd.shape == self.constant.shape) or self.mean.ndim != 1:
            raise PyRACEInvalidDatasetException('one (mean, sd) pair per feature is required')
        if np.any(self.sd < 0):
            raise PyRACEInvalidDatasetException('standard deviations must be non negative')

    def __len__(self):
        return self.mean.shape[0]


###########
# LOADING #
###########
def _read_csv(path: str) -> pandas.DataFrame:
    if not os.path.isfile(path):
        raise PyRACEMissingFileException(path)
    try:
        return pandas.read_csv(path, sep=',', header=0, dtype=str, encoding='utf-8', quoting=csv.QUOTE_NONE,
                               keep_default_na=False, skip_blank_lines=True)
    except pandas.errors.EmptyDataError:
        raise PyRACEEmptyDatasetException()
    except (pandas.errors.ParserError, UnicodeDecodeError) as exn:
        raise PyRACEParseException(_bad_line_number(exn), '*')


def _bad_line_number(exn) -> int:
    # pandas reports "Expected x fields in line N", N counting the header
    words = str(exn).replace(',', ' ').split()
    for previous, word in zip(words, words[1:]):
        if previous == 'line' and word.isdigit():
            return int(word) - 1
    return 0


def _parse_features(frame: pandas.DataFrame, columns: Sequence[str]) -> np.ndarray:
    values = np.empty((len(frame), len(columns)), dtype=np.float64)
    for j, column in enumerate(columns):
        values[:, j] = pandas.to_numeric(frame[column].str.strip(), errors='coerce').to_numpy(dtype=np.float64)
    bad = np.argwhere(~np.isfinite(values))
    if len(bad) > 0:
        row, col = bad[0]
        raise PyRACEParseException(int(row) + 1, columns[int(col)])
    return values


def load_csv(path: str, label_column: str) -> Dataset:
    """
    Read a comma separated file with a header row

    :param path: csv file, UTF-8, no quoted separators
    :param label_column: name of the column holding the class labels, every other column is a feature
    :return: the dataset, classes coded by order of first appearance
    :raise PyRACEMissingFileException: if the file doesn't exist
    :raise PyRACEMissingColumnException: if label_column isn't in the header
    :raise PyRACENoFeatureException: if label_column is the only column
    :raise PyRACEParseException: if a feature cell isn't a finite real number
    :raise PyRACEEmptyDatasetException: if the file holds no data row
    :raise PyRACESingleClassException: if fewer than two distinct labels exist
    """
    frame = _read_csv(path)
    if label_column not in frame.columns:
        raise PyRACEMissingColumnException(label_column)
    if len(frame) == 0:
        raise PyRACEEmptyDatasetException()

    feature_names = [name for name in frame.columns if name != label_column]
    if not feature_names:
        raise PyRACENoFeatureException(label_column)
    rows = _parse_features(frame, feature_names)

    codes, uniques = pandas.factorize(frame[label_column], sort=False)
    class_names = [str(name) for name in uniques]
    if len(class_names) < 2:
        raise PyRACESingleClassException(class_names[0])

    logger.info('loaded %s : %d rows, %d features, %d classes', path, len(rows), len(feature_names), len(class_names))
    return Dataset(tuple(feature_names), rows, codes, tuple(class_names))


def load_features(path: str, feature_names: Sequence[str],
                  label_column: Optional[str] = None) -> Tuple[np.ndarray, Optional[List[str]]]:
    """
    Read the feature columns a trained model expects, in the model's column order

    :param path: csv file in the same dialect as ``load_csv``
    :param feature_names: columns to read
    :param label_column: optional label column, ignored if absent from the file
    :return: (rows, label strings or None)
    :raise PyRACEColumnMismatchException: if a feature column is absent
    """
    frame = _read_csv(path)
    if any(name not in frame.columns for name in feature_names):
        raise PyRACEColumnMismatchException(feature_names, list(frame.columns))
    rows = _parse_features(frame, list(feature_names))
    labels = None
    if label_column is not None and label_column in frame.columns:
        labels = [str(label) for label in frame[label_column]]
    return rows, labels


#############
# SPLITTING #
#############
def _round_half_up(x: float) -> int:
    return int(np.floor(x + 0.5))


def _split_sizes(n: int, spec: SplitSpec) -> Tuple[int, int, int]:
    n_train = _round_half_up(spec.train_fraction * n)
    n_valid = _round_half_up(spec.valid_fraction * n)
    return n_train, n_valid, n - n_train - n_valid


def _augment(extra: np.ndarray, slack: np.ndarray, room: np.ndarray, source: int) -> bool:
    """
    Move one more row of class ``source`` into a split that still has room, through an alternating path that may
    shift rows of other classes between splits
    """
    n_classes, n_splits = extra.shape
    parent = {('class', source): None}
    queue = deque([('class', source)])
    while queue:
        node = queue.popleft()
        kind, index = node
        if kind == 'class':
            neighbours = [('split', s) for s in range(n_splits) if slack[index, s] and not extra[index, s]]
        else:
            if room[index] > 0:
                room[index] -= 1
                while node is not None:
                    previous = parent[node]
                    if node[0] == 'split':
                        extra[previous[1], node[1]] = True
                    elif previous is not None:
                        extra[node[1], previous[1]] = False
                    node = previous
                return True
            neighbours = [('class', c) for c in range(n_classes) if extra[c, index]]
        for neighbour in neighbours:
            if neighbour not in parent:
                parent[neighbour] = node
                queue.append(neighbour)
    return False


def _stratified_sizes(ds: Dataset, totals: Tuple[int, int, int]) -> np.ndarray:
    """
    Share the split totals among the classes

    Every cell is the floor or the ceiling of the class proportional share ``count * total / n``, rows and columns
    add up to the class counts and the split totals, every class keeps one training row.

    :return: (n_classes, 3) row counts
    :raise PyRACEStratificationImpossibleException: if no such table exists
    """
    counts = ds.class_counts().astype(np.int64)
    totals = np.asarray(totals, dtype=np.int64)
    products = np.outer(counts, totals)
    sizes = products // ds.n_rows
    slack = products % ds.n_rows != 0

    forced = (counts > 0) & (sizes[:, 0] == 0)
    sizes[forced, 0] = 1
    slack[forced, 0] = False

    row_left = counts - sizes.sum(axis=1)
    room = totals - sizes.sum(axis=0)
    scarce = ds.class_names[int(np.argmin(np.where(counts > 0, counts, np.iinfo(np.int64).max)))]
    if np.any(room < 0) or np.any(row_left < 0):
        raise PyRACEStratificationImpossibleException(scarce)

    extra = np.zeros(sizes.shape, dtype=bool)
    for class_index in range(len(counts)):
        for _ in range(int(row_left[class_index])):
            if not _augment(extra, slack, room, class_index):
                raise PyRACEStratificationImpossibleException(scarce)
    return sizes + extra


def split_three_way(ds: Dataset, spec: SplitSpec) -> Tuple[Dataset, Dataset, Dataset]:
    """
    Partition the rows into train, validation and test datasets

    Split sizes are ``round(fraction * n)`` (half up), the test split absorbing the remainder. Under stratification
    each split size is shared among the classes so that every class count is within one row of its proportional
    share. Rows keep their original order inside each split.

    :raise PyRACETooFewRowsException: if one of the splits would be empty
    :raise PyRACEStratificationImpossibleException: if a class can't keep a training row
    """
    totals = _split_sizes(ds.n_rows, spec)
    if min(totals) <= 0:
        raise PyRACETooFewRowsException(ds.n_rows)

    stream = RngStream(spec.seed)
    if spec.stratified:
        groups = [np.flatnonzero(ds.labels == c) for c in range(ds.n_classes)]
        sizes = _stratified_sizes(ds, totals)
    else:
        groups = [np.arange(ds.n_rows)]
        sizes = np.array([totals])

    parts = ([], [], [])
    for group, (n_train, n_valid, _) in zip(groups, sizes):
        order = [int(group[i]) for i in stream.permutation(len(group))]
        parts[0].extend(order[:n_train])
        parts[1].extend(order[n_train:n_train + n_valid])
        parts[2].extend(order[n_train + n_valid:])
    return tuple(ds.take(sorted(part)) for part in parts)


def merge(first: Dataset, second: Dataset) -> Dataset:
    """
    Concatenate the rows of two datasets sharing features and classes

    :raise PyRACEColumnMismatchException: if the schemas differ
    """
    if first.feature_names != second.feature_names or first.class_names != second.class_names:
        raise PyRACEColumnMismatchException(first.feature_names, second.feature_names)
    return Dataset(first.feature_names, np.vstack([first.rows, second.rows]),
                   np.concatenate([first.labels, second.labels]), first.class_names)


##############
# PROJECTION #
##############
def project(ds: Dataset, mask: FeatureMask) -> Dataset:
    """
    Keep the masked-in columns, in their original order

    :raise PyRACELengthMismatchException: if the mask length isn't the feature count
    """
    if len(mask) != ds.n_features:
        raise PyRACELengthMismatchException(ds.n_features, len(mask))
    if mask.popcount == 0:
        raise PyRACEEmptyMaskException()
    indices = mask.indices
    return Dataset(tuple(ds.feature_names[i] for i in indices), ds.rows[:, indices], ds.labels, ds.class_names)


###################
# STANDARDIZATION #
###################
def fit_standardizer(ds: Dataset) -> ScalerStats:
    """
    Per column sample mean and population standard deviation (divided by n)

    A column is constant when all its values are equal, its deviation is then exactly 0.
    """
    rows = ds.rows
    constant = np.all(rows == rows[0], axis=0)
    mean = rows.mean(axis=0)
    mean = np.where(constant, rows[0], mean)
    sd = np.sqrt(np.mean((rows - mean) ** 2, axis=0))
    sd = np.where(constant, 0.0, sd)
    if np.any(constant):
        logger.debug('constant features : %s', [ds.feature_names[i] for i in np.flatnonzero(constant)])
    return ScalerStats(mean, sd, constant)


def standardize_rows(rows: np.ndarray, stats: ScalerStats) -> np.ndarray:
    """
    Apply ``(x - mean) / sd`` to a matrix or a single vector, constant columns become 0

    :raise PyRACEArityMismatchException: if the column count differs from the stats arity
    """
    rows = np.asarray(rows, dtype=np.float64)
    if rows.shape[-1] != len(stats):
        raise PyRACEArityMismatchException(len(stats), rows.shape[-1])
    centered = rows - stats.mean
    return np.divide(centered, stats.sd, out=np.zeros_like(centered), where=~stats.constant)


def apply_standardizer(ds: Dataset, stats: ScalerStats) -> Dataset:
    """
    :return: a dataset whose cells are ``(x - mean) / sd``, constant columns set to 0
    :raise PyRACEArityMismatchException: if the stats arity differs from the feature count
    """
    if len(stats) != ds.n_features:
        raise PyRACEArityMismatchException(len(stats), ds.n_features)
    return Dataset(ds.feature_names, standardize_rows(ds.rows, stats), ds.labels, ds.class_names)
