# The answer to a query.  Probabilities within the probability tolerance of
# one or zero are reported as true or false; a question with no consistent
# framework compatible with the data is meaningless.  Every verdict carries the
# framework in which it was computed.

from enum import Enum

from chronos.base.ChronosBase import ChronosBase


class _VerdictFields(Enum):
    KIND = "verdict"
    PROBABILITY = "probability"
    NOTE = "note"


class VerdictKind(Enum):
    PROBABILITY = "probability"
    TRUE = "true"
    FALSE = "false"
    MEANINGLESS = "meaningless"
    DATA_INCONSISTENT = "data-inconsistent"


class Classification(Enum):
    TAUTOLOGY = "tautology"
    CONTRADICTION = "contradiction"
    CONTINGENT = "contingent"


# ***********************************************************************


class Verdict(ChronosBase):

    frameworkOfRecord = None    # Framework, when one was constructed
    report = None               # ConsistencyReport of the candidate framework

    def __init__(self, kind: VerdictKind, probability: float = None, note: str = None,
                 frameworkOfRecord=None, report=None):
        super(Verdict, self).__init__(None)
        self.setKind(kind)
        self.setProbability(probability)
        self.setNote(note)
        self.frameworkOfRecord = frameworkOfRecord
        self.report = report

    @staticmethod
    def fromProbability(p: float, tolProb: float, frameworkOfRecord=None, note: str = None,
                        report=None) -> "Verdict":
        if p >= 1.0 - tolProb:
            return Verdict(VerdictKind.TRUE, 1.0, note, frameworkOfRecord, report)
        if p <= tolProb:
            return Verdict(VerdictKind.FALSE, 0.0, note, frameworkOfRecord, report)
        return Verdict(VerdictKind.PROBABILITY, p, note, frameworkOfRecord, report)

    def setKind(self, kind: VerdictKind) -> None:
        self._setArg(_VerdictFields.KIND.value, kind.value)

    def getKind(self) -> VerdictKind:
        return VerdictKind(self._getArg(_VerdictFields.KIND.value))

    def setProbability(self, p: float) -> None:
        self._setArg(_VerdictFields.PROBABILITY.value, None if p is None else float(p))

    def getProbability(self) -> float:
        return self._getArg(_VerdictFields.PROBABILITY.value)

    def setNote(self, note: str) -> None:
        self._setArg(_VerdictFields.NOTE.value, note)

    def getNote(self) -> str:
        return self._getArg(_VerdictFields.NOTE.value)

    def getFrameworkOfRecord(self):
        return self.frameworkOfRecord

    def getReport(self):
        return self.report

    def hasProbability(self) -> bool:
        return self.getKind() in (VerdictKind.PROBABILITY, VerdictKind.TRUE, VerdictKind.FALSE)

    def __str__(self) -> str:
        if self.hasProbability():
            return "{} (p = {:.12g})".format(self.getKind().value, self.getProbability())
        return self.getKind().value
