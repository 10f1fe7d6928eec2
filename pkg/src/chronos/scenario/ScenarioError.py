# Errors found while reading a scenario.  Every one carries the position of the
# offending token or declaration; engine errors met while elaborating are
# re-raised here with the span of the declaration being elaborated.

from enum import Enum

from chronos.base.ChronosError import ChronosError, ChronosErrorCode
from chronos.scenario.ScenarioSource import SourceSpan


class ScenarioErrorCode(Enum):
    SYNTAX_ERROR = "SYNTAX_ERROR"
    DUPLICATE_IDENTIFIER = "DUPLICATE_IDENTIFIER"
    UNKNOWN_IDENTIFIER = "UNKNOWN_IDENTIFIER"
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    DIMENSION_LIMIT = "DIMENSION_LIMIT"
    NON_UNITARY_DYNAMICS = "NON_UNITARY_DYNAMICS"
    INCONSISTENT_FRAMEWORK = "INCONSISTENT_FRAMEWORK"
    MISSING_SPACE = "MISSING_SPACE"
    INVALID_TIMES = "INVALID_TIMES"
    MISSING_DYNAMICS = "MISSING_DYNAMICS"
    NOT_A_PROJECTOR = "NOT_A_PROJECTOR"
    NOT_HERMITIAN = "NOT_HERMITIAN"
    INVALID_DENSITY = "INVALID_DENSITY"
    ZERO_VECTOR = "ZERO_VECTOR"
    NON_COMMUTING = "NON_COMMUTING"
    NOT_ORTHOGONAL = "NOT_ORTHOGONAL"
    INCOMPLETE_SUM = "INCOMPLETE_SUM"
    NOT_IN_FRAMEWORK = "NOT_IN_FRAMEWORK"
    INVALID_DISTRIBUTION = "INVALID_DISTRIBUTION"
    INVALID_NUMBER = "INVALID_NUMBER"
    UNSUPPORTED_DATA = "UNSUPPORTED_DATA"
    ENGINE_ERROR = "ENGINE_ERROR"


_FROM_ENGINE = {
    ChronosErrorCode.NOT_HERMITIAN: ScenarioErrorCode.NOT_HERMITIAN,
    ChronosErrorCode.NOT_IDEMPOTENT: ScenarioErrorCode.NOT_A_PROJECTOR,
    ChronosErrorCode.NON_INTEGER_TRACE: ScenarioErrorCode.NOT_A_PROJECTOR,
    ChronosErrorCode.DIMENSION_MISMATCH: ScenarioErrorCode.DIMENSION_MISMATCH,
    ChronosErrorCode.DIMENSION_LIMIT: ScenarioErrorCode.DIMENSION_LIMIT,
    ChronosErrorCode.ZERO_VECTOR: ScenarioErrorCode.ZERO_VECTOR,
    ChronosErrorCode.NON_COMMUTING: ScenarioErrorCode.NON_COMMUTING,
    ChronosErrorCode.NOT_A_PROJECTOR_PRODUCT: ScenarioErrorCode.NON_COMMUTING,
    ChronosErrorCode.NON_UNITARY: ScenarioErrorCode.NON_UNITARY_DYNAMICS,
    ChronosErrorCode.INVALID_DENSITY_MATRIX: ScenarioErrorCode.INVALID_DENSITY,
    ChronosErrorCode.NON_FINITE: ScenarioErrorCode.INVALID_NUMBER,
    ChronosErrorCode.INVALID_TIME_GRID: ScenarioErrorCode.INVALID_TIMES,
    ChronosErrorCode.UNKNOWN_TIME: ScenarioErrorCode.INVALID_TIMES,
    ChronosErrorCode.NOT_ORTHOGONAL: ScenarioErrorCode.NOT_ORTHOGONAL,
    ChronosErrorCode.INCOMPLETE_SUM: ScenarioErrorCode.INCOMPLETE_SUM,
    ChronosErrorCode.INCONSISTENT_FRAMEWORK: ScenarioErrorCode.INCONSISTENT_FRAMEWORK,
    ChronosErrorCode.INCONSISTENT_INPUT: ScenarioErrorCode.INCONSISTENT_FRAMEWORK,
    ChronosErrorCode.NEGATIVE_PROBABILITY: ScenarioErrorCode.INVALID_DISTRIBUTION,
    ChronosErrorCode.NOT_NORMALIZED: ScenarioErrorCode.INVALID_DISTRIBUTION,
    ChronosErrorCode.POSITIVE_ON_ZERO_WEIGHT: ScenarioErrorCode.INVALID_DISTRIBUTION,
    ChronosErrorCode.UNSUPPORTED_DATA: ScenarioErrorCode.UNSUPPORTED_DATA,
}


class ScenarioError(ChronosError):

    code: ScenarioErrorCode = None
    span: SourceSpan = None
    sourceName: str = None

    def __init__(self, code: ScenarioErrorCode, msg: str, span: SourceSpan,
                 sourceName: str = None, **details):
        super(ScenarioError, self).__init__(msg, **details)
        self.code = code
        self.span = span
        self.sourceName = sourceName

    @staticmethod
    def fromEngine(ex: ChronosError, span: SourceSpan, sourceName: str = None) -> "ScenarioError":
        code = _FROM_ENGINE.get(ex.getCode(), ScenarioErrorCode.ENGINE_ERROR)
        return ScenarioError(code, ex.msg, span, sourceName, engineCode=ex.getCode().value,
                             **ex.getDetails())

    def getCode(self) -> ScenarioErrorCode:
        return self.code

    def getSpan(self) -> SourceSpan:
        return self.span

    def getLine(self) -> int:
        return self.span.line

    def getColumn(self) -> int:
        return self.span.col

    def __str__(self) -> str:
        return "{}:{}:{}: {} {}".format(self.sourceName or "<string>", self.span.line,
                                        self.span.col, self.code.value, self.msg)
