"""
Framework: a decomposition that passed its consistency check, together with
the dynamics and metric that made it consistent.  Weights of its minimal
elements are cached from the check; thanks to consistency the weight of any
algebra element is the sum over its indicator.
"""

from typing import List, Optional

from chronos.base.ChronosError import InconsistentFrameworkError, ZeroConditionWeightError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.qalg.OperatorMetric import OperatorMetric
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.HistoryWeights import HistoryWeights
from chronos.framework.Decomposition import Decomposition
from chronos.framework.AlgebraElement import AlgebraElement
from chronos.framework.ConsistencyReport import ConsistencyReport, ConsistencyMode
from chronos.framework.ConsistencyChecker import ConsistencyChecker


class Framework:

    _decomposition: Decomposition = None
    _family: PropagatorFamily = None
    _report: ConsistencyReport = None
    _metric: OperatorMetric = None
    _tol: float = None
    _name: str = None

    def __init__(self, decomposition: Decomposition, family: PropagatorFamily,
                 report: ConsistencyReport, metric: OperatorMetric = None,
                 tol: float = None, name: str = None):
        if not report.getVerdict():
            raise InconsistentFrameworkError(
                "decomposition{} is not consistent: {}".format(
                    "" if name is None else " " + name, report),
                magnitude=report.getWorstMagnitude(), pair=report.getWorstPair())
        self._decomposition = decomposition
        self._family = family
        self._report = report
        self._metric = metric
        self._tol = ChronosConfig.resolveTol(tol)
        self._name = name

    @staticmethod
    def fromDecomposition(decomposition: Decomposition, family: PropagatorFamily,
                          metric: OperatorMetric = None,
                          mode: ConsistencyMode = ConsistencyMode.STRONG,
                          tol: float = None, name: str = None) -> "Framework":
        report = ConsistencyChecker.check(decomposition, family, metric, mode, tol)
        fw = Framework(decomposition, family, report, metric, tol, name)
        Logger.debug("framework {} with {} minimal elements".format(
            name or "<anonymous>", decomposition.size()), "reasoning")
        return fw

    @staticmethod
    def trivial(family: PropagatorFamily, dim: int, grid, metric: OperatorMetric = None,
                mode: ConsistencyMode = ConsistencyMode.STRONG, tol: float = None) -> "Framework":
        return Framework.fromDecomposition(Decomposition.trivial(grid, dim), family, metric,
                                           mode, tol, "trivial")

    # ***********************************************************************

    def getDecomposition(self) -> Decomposition:
        return self._decomposition

    def getFamily(self) -> PropagatorFamily:
        return self._family

    def getReport(self) -> ConsistencyReport:
        return self._report

    def getMode(self) -> ConsistencyMode:
        return self._report.getMode()

    def getMetric(self) -> Optional[OperatorMetric]:
        return self._metric

    def getTol(self) -> float:
        return self._tol

    def getName(self) -> str:
        return self._name

    def setName(self, name: str) -> None:
        self._name = name

    def getDim(self) -> int:
        return self._decomposition.getDim()

    def getGrid(self):
        return self._decomposition.getGrid()

    def size(self) -> int:
        return self._decomposition.size()

    def getWeights(self) -> List[float]:
        return self._report.getWeights()

    def isZeroWeight(self, i: int) -> bool:
        return HistoryWeights.isZeroWeight(self.getWeights()[i], self.getDim(), self._tol)

    # ***********************************************************************
    # algebra

    def element(self, indicator) -> AlgebraElement:
        return AlgebraElement(self._decomposition, indicator)

    def contains(self, y: ProductHistory) -> Optional[AlgebraElement]:
        indicator = self._decomposition.contains(y, self._tol)
        if indicator is None:
            return None
        return self.element(indicator)

    def weightOf(self, e: AlgebraElement) -> float:
        weights = self.getWeights()
        return sum(weights[i] for i in e.indices())

    def theta(self, x: AlgebraElement, y: AlgebraElement) -> float:
        wy = self.weightOf(y)
        if HistoryWeights.isZeroWeight(wy, self.getDim(), self._tol):
            raise ZeroConditionWeightError("conditioning element has weight {:.3e}".format(wy),
                                           weight=wy)
        return self.weightOf(x.meet(y)) / wy

    def __repr__(self) -> str:
        return "Framework({}, {} minimal elements, {})".format(
            self._name, self.size(), self.getMode().value)
