# One line of output: the verdict for a named query, with enough of the
# framework of record to see where the answer lives.  Probabilities are rounded
# to 12 significant digits after banding, so the json form is stable across
# runs; only the timing field changes.

from enum import Enum

from chronos.base.ChronosBase import ChronosBase
from chronos.reasoning.Verdict import Verdict


PRECISION = 12
ERROR = "error"


class _QueryResultFields(Enum):
    ID = "id"
    VERDICT = "verdict"
    PROBABILITY = "probability"
    NOTE = "note"
    FRAMEWORK = "framework"
    WORST_MAGNITUDE = "worstMagnitude"
    ERROR = "error"
    ELAPSED_MS = "elapsedMs"


def roundProbability(p: float) -> float:
    return float("{:.{}g}".format(p, PRECISION))


class QueryResult(ChronosBase):

    def __init__(self, queryId: str):
        super(QueryResult, self).__init__(None)
        self._setArg(_QueryResultFields.ID.value, queryId)
        self._setArg(_QueryResultFields.VERDICT.value, None)

    @staticmethod
    def fromVerdict(queryId: str, verdict: Verdict, elapsedMs: float) -> "QueryResult":
        result = QueryResult(queryId)
        result.setVerdict(verdict.getKind().value)
        if verdict.hasProbability():
            result.setProbability(verdict.getProbability())
        if verdict.getNote() is not None:
            result.setNote(verdict.getNote())
        fw = verdict.getFrameworkOfRecord()
        if (fw is not None):
            result.setFramework({"elements": fw.size(),
                                 "grid": list(fw.getGrid().getLabels())})
        report = verdict.getReport()
        if (report is not None):
            result.setWorstMagnitude(report.getWorstMagnitude())
        result.setElapsedMs(elapsedMs)
        return result

    @staticmethod
    def fromError(queryId: str, code: str, message: str, elapsedMs: float) -> "QueryResult":
        result = QueryResult(queryId)
        result.setVerdict(ERROR)
        result._setArg(_QueryResultFields.ERROR.value, {"code": code, "message": message})
        result.setElapsedMs(elapsedMs)
        return result

    def getId(self) -> str:
        return self._getArg(_QueryResultFields.ID.value)

    def setVerdict(self, kind: str) -> None:
        self._setArg(_QueryResultFields.VERDICT.value, kind)

    def getVerdict(self) -> str:
        return self._getArg(_QueryResultFields.VERDICT.value)

    def setProbability(self, p: float) -> None:
        self._setArg(_QueryResultFields.PROBABILITY.value, roundProbability(p))

    def getProbability(self) -> float:
        return self._getArg(_QueryResultFields.PROBABILITY.value)

    def hasProbability(self) -> bool:
        return self.getProbability() is not None

    def setNote(self, note: str) -> None:
        self._setArg(_QueryResultFields.NOTE.value, note)

    def getNote(self) -> str:
        return self._getArg(_QueryResultFields.NOTE.value)

    def setFramework(self, summary: dict) -> None:
        self._setArg(_QueryResultFields.FRAMEWORK.value, summary)

    def getFramework(self) -> dict:
        return self._getArg(_QueryResultFields.FRAMEWORK.value)

    def setWorstMagnitude(self, magnitude: float) -> None:
        self._setArg(_QueryResultFields.WORST_MAGNITUDE.value, float(magnitude))

    def getWorstMagnitude(self) -> float:
        return self._getArg(_QueryResultFields.WORST_MAGNITUDE.value)

    def getError(self) -> dict:
        return self._getArg(_QueryResultFields.ERROR.value)

    def isError(self) -> bool:
        return self.getVerdict() == ERROR

    def setElapsedMs(self, elapsedMs: float) -> None:
        self._setArg(_QueryResultFields.ELAPSED_MS.value, float(elapsedMs))

    def getElapsedMs(self) -> float:
        return self._getArg(_QueryResultFields.ELAPSED_MS.value)

    def toText(self) -> str:
        if self.isError():
            err = self.getError()
            return "{}: error {} {}".format(self.getId(), err["code"], err["message"])
        text = "{}: {}".format(self.getId(), self.getVerdict())
        if self.hasProbability():
            text += " p = {:.{}g}".format(self.getProbability(), PRECISION)
        fw = self.getFramework()
        if (fw is not None):
            text += "  [framework: {} element(s) on t = {}]".format(
                fw["elements"], ", ".join("{:g}".format(t) for t in fw["grid"]))
        if self.getNote() is not None:
            text += "  ({})".format(self.getNote())
        return text
