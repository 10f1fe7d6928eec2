# The outcome of a consistency check on a decomposition: the mode used, the
# verdict and the worst off-diagonal pair, so near misses stay visible.

from enum import Enum
from typing import List, Optional, Tuple

from chronos.base.ChronosBase import ChronosBase


class _ConsistencyReportFields(Enum):
    MODE = "mode"
    VERDICT = "verdict"
    WORST_PAIR = "worstPair"
    WORST_MAGNITUDE = "worstMagnitude"
    TOLERANCE = "tolerance"
    THRESHOLD = "threshold"
    ELEMENT_COUNT = "elementCount"
    SINGLE_TIME = "singleTime"
    PICTURE = "picture"
    WEIGHTS = "_weights"        # kept out of the serialized form


# The consistency conditions the checker knows.  weak compares real parts of
# the operator inner products, strong the full complex values, and the rho
# modes weight the inner product with initial (and final) density matrices.
class ConsistencyMode(Enum):
    WEAK = "weak"
    STRONG = "strong"
    RHO = "rho"
    RHO_RHO = "rho-rho"


# ***********************************************************************


class ConsistencyReport(ChronosBase):

    def __init__(self, mode: ConsistencyMode = ConsistencyMode.STRONG):
        super(ConsistencyReport, self).__init__(None)
        self.setMode(mode)
        self.setVerdict(False)
        self.setWorstPair(None)
        self.setWorstMagnitude(0.0)
        self.setSingleTime(False)
        self.setPicture("schrodinger")

    def setMode(self, mode: ConsistencyMode) -> None:
        self._setArg(_ConsistencyReportFields.MODE.value, mode.value)

    def getMode(self) -> ConsistencyMode:
        return ConsistencyMode(self._getArg(_ConsistencyReportFields.MODE.value))

    def setVerdict(self, verdict: bool) -> None:
        self._setArg(_ConsistencyReportFields.VERDICT.value, bool(verdict))

    def getVerdict(self) -> bool:
        return self._getArg(_ConsistencyReportFields.VERDICT.value)

    def setWorstPair(self, pair: Optional[Tuple[int, int]]) -> None:
        self._setArg(_ConsistencyReportFields.WORST_PAIR.value,
                     None if pair is None else [int(pair[0]), int(pair[1])])

    def getWorstPair(self) -> Optional[Tuple[int, int]]:
        pair = self._getArg(_ConsistencyReportFields.WORST_PAIR.value)
        return None if pair is None else tuple(pair)

    def setWorstMagnitude(self, magnitude: float) -> None:
        self._setArg(_ConsistencyReportFields.WORST_MAGNITUDE.value, float(magnitude))

    def getWorstMagnitude(self) -> float:
        return self._getArg(_ConsistencyReportFields.WORST_MAGNITUDE.value)

    def setTolerance(self, tol: float) -> None:
        self._setArg(_ConsistencyReportFields.TOLERANCE.value, float(tol))

    def getTolerance(self) -> float:
        return self._getArg(_ConsistencyReportFields.TOLERANCE.value)

    def setThreshold(self, threshold: float) -> None:
        self._setArg(_ConsistencyReportFields.THRESHOLD.value, float(threshold))

    def getThreshold(self) -> float:
        return self._getArg(_ConsistencyReportFields.THRESHOLD.value)

    def setElementCount(self, n: int) -> None:
        self._setArg(_ConsistencyReportFields.ELEMENT_COUNT.value, int(n))

    def getElementCount(self) -> int:
        return self._getArg(_ConsistencyReportFields.ELEMENT_COUNT.value)

    def setSingleTime(self, single: bool) -> None:
        self._setArg(_ConsistencyReportFields.SINGLE_TIME.value, bool(single))

    def isSingleTime(self) -> bool:
        return self._getArg(_ConsistencyReportFields.SINGLE_TIME.value)

    def setPicture(self, picture: str) -> None:
        self._setArg(_ConsistencyReportFields.PICTURE.value, picture)

    def getPicture(self) -> str:
        return self._getArg(_ConsistencyReportFields.PICTURE.value)

    def setWeights(self, weights: List[float]) -> None:
        self._setArg(_ConsistencyReportFields.WEIGHTS.value, [float(w) for w in weights])

    def getWeights(self) -> List[float]:
        return self._getArg(_ConsistencyReportFields.WEIGHTS.value)

    def __str__(self) -> str:
        return "{} consistency: {} (worst pair {} |<K,K'>| = {:.3e}, threshold {:.1e})".format(
            self.getMode().value,
            "consistent" if self.getVerdict() else "INCONSISTENT",
            self.getWorstPair(), self.getWorstMagnitude(), self.getThreshold() or 0.0)
