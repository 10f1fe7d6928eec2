# Errors raised by the engine.  Each carries a canonical code so callers (the
# scenario elaborator, the cli) can map failures without string matching, plus
# a details dict naming the violated bound and the observed magnitude where one
# exists.

from enum import Enum


class ChronosErrorCode(Enum):
    # qalg
    NOT_HERMITIAN = "NOT_HERMITIAN"
    NOT_IDEMPOTENT = "NOT_IDEMPOTENT"
    NON_INTEGER_TRACE = "NON_INTEGER_TRACE"
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    DIMENSION_LIMIT = "DIMENSION_LIMIT"
    ZERO_VECTOR = "ZERO_VECTOR"
    NON_COMMUTING = "NON_COMMUTING"
    UNKNOWN_TIME = "UNKNOWN_TIME"
    NON_UNITARY = "NON_UNITARY"
    INVALID_DENSITY_MATRIX = "INVALID_DENSITY_MATRIX"
    NON_FINITE = "NON_FINITE"
    # histories
    INVALID_TIME_GRID = "INVALID_TIME_GRID"
    NOT_A_SUPERSET = "NOT_A_SUPERSET"
    NOT_A_PROJECTOR_PRODUCT = "NOT_A_PROJECTOR_PRODUCT"
    ZERO_CONDITION_WEIGHT = "ZERO_CONDITION_WEIGHT"
    # framework
    NOT_ORTHOGONAL = "NOT_ORTHOGONAL"
    INCOMPLETE_SUM = "INCOMPLETE_SUM"
    OWNER_MISMATCH = "OWNER_MISMATCH"
    INCONSISTENT_INPUT = "INCONSISTENT_INPUT"
    INTERMEDIATE_FIXED_EVENT = "INTERMEDIATE_FIXED_EVENT"
    INVALID_METRIC = "INVALID_METRIC"
    # reasoning
    INCONSISTENT_FRAMEWORK = "INCONSISTENT_FRAMEWORK"
    NEGATIVE_PROBABILITY = "NEGATIVE_PROBABILITY"
    NOT_NORMALIZED = "NOT_NORMALIZED"
    POSITIVE_ON_ZERO_WEIGHT = "POSITIVE_ON_ZERO_WEIGHT"
    NOT_A_REFINEMENT = "NOT_A_REFINEMENT"
    NON_COMMUTING_FRAMEWORKS = "NON_COMMUTING_FRAMEWORKS"
    INCONSISTENT_REFINEMENT = "INCONSISTENT_REFINEMENT"
    INCOMPATIBLE_DATA = "INCOMPATIBLE_DATA"
    ZERO_WEIGHT_DATA = "ZERO_WEIGHT_DATA"
    UNSUPPORTED_DATA = "UNSUPPORTED_DATA"
    # configuration
    INVALID_CONFIG = "INVALID_CONFIG"
    UNKNOWN_CORPUS = "UNKNOWN_CORPUS"
    # anything without a more specific code
    INTERNAL = "INTERNAL"


class ChronosError(Exception):
    CODE: ChronosErrorCode = ChronosErrorCode.INTERNAL

    def __init__(self, msg: str, **details):
        super(ChronosError, self).__init__(msg)
        self.msg = msg
        self.details = details

    def getCode(self) -> ChronosErrorCode:
        return self.CODE

    def getDetails(self) -> dict:
        return self.details

    def __str__(self) -> str:
        return "{}: {}".format(self.CODE.value, self.msg)


# ***************************************************************************
# qalg

class NotHermitianError(ChronosError):
    CODE = ChronosErrorCode.NOT_HERMITIAN

class NotIdempotentError(ChronosError):
    CODE = ChronosErrorCode.NOT_IDEMPOTENT

class NonIntegerTraceError(ChronosError):
    CODE = ChronosErrorCode.NON_INTEGER_TRACE

class DimensionMismatchError(ChronosError):
    CODE = ChronosErrorCode.DIMENSION_MISMATCH

class DimensionLimitError(ChronosError):
    CODE = ChronosErrorCode.DIMENSION_LIMIT

class ZeroVectorError(ChronosError):
    CODE = ChronosErrorCode.ZERO_VECTOR

class NonCommutingError(ChronosError):
    CODE = ChronosErrorCode.NON_COMMUTING

class UnknownTimeError(ChronosError):
    CODE = ChronosErrorCode.UNKNOWN_TIME

class NonUnitaryError(ChronosError):
    CODE = ChronosErrorCode.NON_UNITARY

class NonFiniteError(ChronosError):
    CODE = ChronosErrorCode.NON_FINITE

class InvalidDensityMatrixError(ChronosError):
    CODE = ChronosErrorCode.INVALID_DENSITY_MATRIX


# ***************************************************************************
# histories

class InvalidTimeGridError(ChronosError):
    CODE = ChronosErrorCode.INVALID_TIME_GRID

class NotASupersetError(ChronosError):
    CODE = ChronosErrorCode.NOT_A_SUPERSET

class NotAProjectorProductError(ChronosError):
    CODE = ChronosErrorCode.NOT_A_PROJECTOR_PRODUCT

class ZeroConditionWeightError(ChronosError):
    CODE = ChronosErrorCode.ZERO_CONDITION_WEIGHT


# ***************************************************************************
# framework

class NotOrthogonalError(ChronosError):
    CODE = ChronosErrorCode.NOT_ORTHOGONAL

class IncompleteSumError(ChronosError):
    CODE = ChronosErrorCode.INCOMPLETE_SUM

class OwnerMismatchError(ChronosError):
    CODE = ChronosErrorCode.OWNER_MISMATCH

class InconsistentInputError(ChronosError):
    CODE = ChronosErrorCode.INCONSISTENT_INPUT

class IntermediateFixedEventError(ChronosError):
    CODE = ChronosErrorCode.INTERMEDIATE_FIXED_EVENT

class InvalidMetricError(ChronosError):
    CODE = ChronosErrorCode.INVALID_METRIC


# ***************************************************************************
# reasoning

class InconsistentFrameworkError(ChronosError):
    CODE = ChronosErrorCode.INCONSISTENT_FRAMEWORK

class NegativeProbabilityError(ChronosError):
    CODE = ChronosErrorCode.NEGATIVE_PROBABILITY

class NotNormalizedError(ChronosError):
    CODE = ChronosErrorCode.NOT_NORMALIZED

class PositiveOnZeroWeightError(ChronosError):
    CODE = ChronosErrorCode.POSITIVE_ON_ZERO_WEIGHT

class NotARefinementError(ChronosError):
    CODE = ChronosErrorCode.NOT_A_REFINEMENT

class NonCommutingFrameworksError(ChronosError):
    CODE = ChronosErrorCode.NON_COMMUTING_FRAMEWORKS

class InconsistentRefinementError(ChronosError):
    CODE = ChronosErrorCode.INCONSISTENT_REFINEMENT

class IncompatibleDataError(ChronosError):
    CODE = ChronosErrorCode.INCOMPATIBLE_DATA

class ZeroWeightDataError(ChronosError):
    CODE = ChronosErrorCode.ZERO_WEIGHT_DATA

class UnsupportedDataError(ChronosError):
    CODE = ChronosErrorCode.UNSUPPORTED_DATA


# ***************************************************************************

class InvalidConfigError(ChronosError):
    CODE = ChronosErrorCode.INVALID_CONFIG

class UnknownCorpusError(ChronosError):
    CODE = ChronosErrorCode.UNKNOWN_CORPUS
