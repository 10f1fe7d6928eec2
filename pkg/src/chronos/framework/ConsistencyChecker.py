"""
ConsistencyChecker: decides whether a decomposition is a framework, i.e.
whether the weight operators of distinct minimal elements are mutually
orthogonal under the metric of the requested mode:

    weak      Re <K(Fj), K(Fk)> = 0
    strong    <K(Fj), K(Fk)> = 0
    rho       Tr[K(Fj)^dagger rho K(Fk)] = 0
    rho-rho   Tr[K(Fj)^dagger rho K(Fk) rho'] = 0

All pairwise inner products come from one Gram matrix over the stacked
weight operators.  The verdict is true iff the worst off-diagonal magnitude
is at most tol * d.  Single-time decompositions pass without computation.
"""

import numpy as np

from chronos.base.ChronosError import InvalidMetricError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.qalg.OperatorMetric import OperatorMetric, MetricKind
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.HistoryWeights import HistoryWeights
from chronos.framework.ConsistencyReport import ConsistencyReport, ConsistencyMode


class ConsistencyChecker:

    @staticmethod
    def metricFor(mode: ConsistencyMode, metric: OperatorMetric = None) -> OperatorMetric:
        if mode == ConsistencyMode.WEAK:
            return OperatorMetric(MetricKind.PLAIN_REAL)
        if mode == ConsistencyMode.STRONG:
            return OperatorMetric(MetricKind.PLAIN_COMPLEX)
        rho = None if metric is None else metric.getRho()
        if rho is None:
            raise InvalidMetricError("{} mode needs a metric with an initial density matrix"
                                     .format(mode.value))
        if mode == ConsistencyMode.RHO:
            return OperatorMetric(MetricKind.INITIAL_RHO, rho=rho)
        rhoPrime = metric.getRhoPrime()
        if rhoPrime is None:
            raise InvalidMetricError("rho-rho mode needs a final density matrix")
        return OperatorMetric(MetricKind.INITIAL_FINAL_RHO, rho=rho, rhoPrime=rhoPrime)

    @staticmethod
    def check(decomposition, fam, metric: OperatorMetric = None,
              mode: ConsistencyMode = ConsistencyMode.STRONG, tol: float = None,
              heisenberg: bool = False, tRef: float = None) -> ConsistencyReport:
        tol = ChronosConfig.resolveTol(tol)
        resolved = ConsistencyChecker.metricFor(mode, metric)
        dim = decomposition.getDim()
        threshold = tol * dim

        report = ConsistencyReport(mode)
        report.setTolerance(tol)
        report.setThreshold(threshold)
        report.setElementCount(decomposition.size())
        report.setPicture("heisenberg" if heisenberg else "schrodinger")

        if heisenberg:
            ops = [HistoryWeights.heisenbergWeightOperator(f, fam, tRef)
                   for f in decomposition.getMinimal()]
        else:
            ops = [HistoryWeights.weightOperator(f, fam) for f in decomposition.getMinimal()]
        gram = resolved.gram(ops)
        report.setWeights(np.real(np.diag(gram)).tolist())

        if decomposition.isSingleTime():
            report.setSingleTime(True)
            report.setVerdict(True)
            return report

        pair, worst = ConsistencyChecker.worstPair(gram, threshold)
        report.setWorstPair(pair)
        report.setWorstMagnitude(worst)
        report.setVerdict(report.getWorstMagnitude() <= threshold)
        Logger.info("{} elements: {}".format(decomposition.size(), report), "consistency")
        return report

    @staticmethod
    def worstPair(gram: np.ndarray, threshold: float):
        """
        Largest off-diagonal magnitude and its witness: the first pair (j, k),
        j < k in row-major order, within threshold of that maximum.  The pair
        is None when every off-diagonal entry is zero.
        """
        rows, cols = np.triu_indices(gram.shape[0], k=1)
        upper = np.abs(gram[rows, cols])
        if upper.size == 0:
            return None, 0.0
        worst = float(upper.max())
        if worst == 0.0:
            return None, worst
        first = int(np.flatnonzero(upper >= worst - threshold)[0])
        return (int(rows[first]), int(cols[first])), worst

    @staticmethod
    def historyDiagnostic(y: ProductHistory, fam, metric: OperatorMetric = None) -> float:
        """
        |<K(Y), K(I - Y)>| for a single history.  K is linear and K(I) is the
        propagator across the history's grid, so K(I - Y) = T(t1, tn) - K(Y).
        A nonzero value means Y cannot sit in any framework with its
        complement as the only other element.
        """
        if metric is None:
            metric = OperatorMetric.plain()
        grid = y.getGrid()
        k = HistoryWeights.weightOperator(y, fam)
        whole = fam.propagator(grid.first(), grid.last(), y.getDim())
        return float(abs(metric.inner(k, whole - k)))
