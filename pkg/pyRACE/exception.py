# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.


class PyRACEException(Exception):
    """Parent class of all pyRACE exception
    """


class PyRACEDataException(PyRACEException):
    """Parent class of the exceptions caused by the content of an input or output file

    The command line interface exits with code 2 when it catches one of them
    """


class PyRACEConfigException(PyRACEException):
    """Parent class of the exceptions caused by an invalid run configuration

    The command line interface exits with code 1 when it catches one of them
    """


##########
# INPUTS #
##########
class PyRACEMissingFileException(PyRACEDataException):
    """Exception raised when an input file doesn't exist

    :var path: path of the missing file
    :vartype path: str
    """
    def __init__(self, path: str):
        PyRACEDataException.__init__(self, f'file not found : {path}')
        self.path = path


class PyRACEMissingColumnException(PyRACEDataException):
    """Exception raised when a required column is absent from the header of a csv file

    :var name: name of the missing column
    :vartype name: str
    """
    def __init__(self, name: str):
        PyRACEDataException.__init__(self, f'missing column : {name}')
        self.name = name


class PyRACEParseException(PyRACEDataException):
    """Exception raised when a feature cell can't be read as a finite real number

    :var row: data row number, starting at 1 for the first line after the header
    :vartype row: int
    :var column: name of the column containing the cell
    :vartype column: str
    """
    def __init__(self, row: int, column: str):
        PyRACEDataException.__init__(self, f'cannot parse a finite real number at row {row}, column {column}')
        self.row = row
        self.column = column


class PyRACEEmptyDatasetException(PyRACEDataException):
    """Exception raised when a csv file contains a header but no data row"""
    def __init__(self):
        PyRACEDataException.__init__(self, 'dataset contains no row')


class PyRACENoFeatureException(PyRACEDataException):
    """Exception raised when a csv file holds no column besides the label column

    :var label_column: name of the label column
    :vartype label_column: str
    """
    def __init__(self, label_column: str):
        PyRACEDataException.__init__(self, f'no feature column besides the label column {label_column}')
        self.label_column = label_column


class PyRACESingleClassException(PyRACEDataException):
    """Exception raised when the label column holds fewer than two distinct labels

    :var label: the only label found
    :vartype label: str
    """
    def __init__(self, label: str):
        PyRACEDataException.__init__(self, f'label column holds a single class : {label}')
        self.label = label


class PyRACEColumnMismatchException(PyRACEDataException):
    """Exception raised when the columns of a file or dataset don't match the expected feature columns

    :var expected: expected column names
    :vartype expected: List[str]
    :var found: column names found
    :vartype found: List[str]
    """
    def __init__(self, expected, found):
        missing = [name for name in expected if name not in found]
        PyRACEDataException.__init__(self, f'column mismatch, missing : {", ".join(missing) or "none"}')
        self.expected = list(expected)
        self.found = list(found)


class PyRACEInvalidDatasetException(PyRACEDataException):
    """Exception raised when a Dataset is built with values that break its invariants

    :var reason: broken invariant
    :vartype reason: str
    """
    def __init__(self, reason: str):
        PyRACEDataException.__init__(self, f'invalid dataset : {reason}')
        self.reason = reason


##########
# SPLITS #
##########
class PyRACETooFewRowsException(PyRACEDataException):
    """Exception raised when a dataset is too small to give three non-empty splits

    :var n_rows: number of rows of the dataset
    :vartype n_rows: int
    """
    def __init__(self, n_rows: int):
        PyRACEDataException.__init__(self, f'{n_rows} rows are not enough for three non-empty splits')
        self.n_rows = n_rows


class PyRACEStratificationImpossibleException(PyRACEDataException):
    """Exception raised when a class has too few rows to appear in the training split

    :var class_name: name of the class
    :vartype class_name: str
    """
    def __init__(self, class_name: str):
        PyRACEDataException.__init__(self, f'class {class_name} has too few rows for a stratified split')
        self.class_name = class_name


class PyRACEDegenerateDataException(PyRACEDataException):
    """Exception raised when a learner receives data it can't be trained on (for example a class absent from the
    training rows)

    :var reason: description of the problem
    :vartype reason: str
    """
    def __init__(self, reason: str):
        PyRACEDataException.__init__(self, f'degenerate training data : {reason}')
        self.reason = reason


#########
# FILES #
#########
class PyRACEIOException(PyRACEDataException):
    """Exception raised when a model or report file can't be read or written

    :var path: path of the file
    :vartype path: str
    """
    def __init__(self, path: str, reason: str = ''):
        PyRACEDataException.__init__(self, f'cannot access {path} {reason}'.strip())
        self.path = path


class PyRACEUnsupportedVersionException(PyRACEDataException):
    """Exception raised when loading a model document written with an unknown format version

    :var version: version found in the document
    """
    def __init__(self, version):
        PyRACEDataException.__init__(self, f'unsupported model format version : {version}')
        self.version = version


class PyRACESchemaException(PyRACEDataException):
    """Exception raised when a model document misses a field or holds a value of the wrong shape

    :var field: name of the faulty field
    :vartype field: str
    """
    def __init__(self, field: str):
        PyRACEDataException.__init__(self, f'invalid or missing field in model document : {field}')
        self.field = field


#################
# CONFIGURATION #
#################
class PyRACEInfeasibleConfigException(PyRACEConfigException):
    """Exception raised when an optimizer configuration breaks one of its invariants

    :var reason: broken invariant
    :vartype reason: str
    """
    def __init__(self, reason: str):
        PyRACEConfigException.__init__(self, f'infeasible configuration : {reason}')
        self.reason = reason


class PyRACEInvalidParamSpecException(PyRACEConfigException):
    """Exception raised when a hyperparameter declaration is malformed (empty range, non positive log bound, ...)

    :var name: hyperparameter name
    :vartype name: str
    """
    def __init__(self, name: str, reason: str):
        PyRACEConfigException.__init__(self, f'invalid declaration of {name} : {reason}')
        self.name = name


class PyRACEUnknownFamilyException(PyRACEConfigException):
    """Exception raised when a model family isn't part of the portfolio or of the search space

    :var family: the unknown family
    """
    def __init__(self, family):
        PyRACEConfigException.__init__(self, f'unknown model family : {family}')
        self.family = family


class PyRACEConfigFileException(PyRACEConfigException):
    """Exception raised when the json run configuration file can't be used

    :var path: path of the configuration file
    :vartype path: str
    """
    def __init__(self, path: str, reason: str):
        PyRACEConfigException.__init__(self, f'bad configuration file {path} : {reason}')
        self.path = path


#############
# CONTRACTS #
#############
class PyRACELengthMismatchException(PyRACEException):
    """Exception raised when two sequences that must have the same length don't"""
    def __init__(self, expected: int, found: int):
        PyRACEException.__init__(self, f'length mismatch : expected {expected}, found {found}')
        self.expected = expected
        self.found = found


class PyRACEEmptyMaskException(PyRACEException):
    """Exception raised when a feature mask selects no feature"""
    def __init__(self):
        PyRACEException.__init__(self, 'feature mask selects no feature')


class PyRACEArityMismatchException(PyRACEException):
    """Exception raised when a feature vector or dataset doesn't have the expected number of features"""
    def __init__(self, expected: int, found: int):
        PyRACEException.__init__(self, f'expected {expected} features, found {found}')
        self.expected = expected
        self.found = found


class PyRACEShapeMismatchException(PyRACEException):
    """Exception raised when the parameters of a linear model don't fit the data shape"""
    def __init__(self, reason: str):
        PyRACEException.__init__(self, f'shape mismatch : {reason}')
        self.reason = reason


class PyRACEInvalidParamsException(PyRACEException):
    """Exception raised when a hyperparameter assignment doesn't fit a model family

    :var name: faulty hyperparameter
    :vartype name: str
    """
    def __init__(self, name: str, reason: str):
        PyRACEException.__init__(self, f'invalid hyperparameter {name} : {reason}')
        self.name = name


class PyRACEWrongFamilyException(PyRACEException):
    """Exception raised when a family specific operation receives a model of another family"""
    def __init__(self, expected, found):
        PyRACEException.__init__(self, f'expected a {expected.name} model, found {found.name}')
        self.expected = expected
        self.found = found


class PyRACEEmptyCountsException(PyRACEException):
    """Exception raised when computing an impurity on a node without rows"""
    def __init__(self):
        PyRACEException.__init__(self, 'class counts sum to zero')


class PyRACEUOutOfRangeException(PyRACEException):
    """Exception raised when a uniform draw given to the sampling transform isn't in [0, 1)"""
    def __init__(self, u: float):
        PyRACEException.__init__(self, f'uniform draw out of [0, 1) : {u}')
        self.u = u


class PyRACEInvalidParentException(PyRACEException):
    """Exception raised when a candidate to mutate doesn't conform to the search space"""
    def __init__(self, candidate_id: int, reason: str):
        PyRACEException.__init__(self, f'candidate {candidate_id} can not be mutated : {reason}')
        self.candidate_id = candidate_id


class PyRACEKTooLargeException(PyRACEException):
    """Exception raised when asking for more survivors than evaluated candidates"""
    def __init__(self, k: int, available: int):
        PyRACEException.__init__(self, f'cannot select {k} survivors among {available} records')
        self.k = k
        self.available = available


class PyRACEIndexOutOfRangeException(PyRACEException):
    """Exception raised when a class index isn't lower than the number of classes"""
    def __init__(self, index: int, n_classes: int):
        PyRACEException.__init__(self, f'class index {index} out of range for {n_classes} classes')
        self.index = index
        self.n_classes = n_classes
