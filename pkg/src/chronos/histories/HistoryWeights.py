"""
HistoryWeights: weight operators, weights and the theta function of histories.

For a product history Y = E1 (.) ... (.) En on times t1 < ... < tn the weight
operator is the chain

    K(Y) = E1 T(t1, t2) E2 T(t2, t3) ... T(tn-1, tn) En

and the weight is W(Y) = <K(Y), K(Y)> under an OperatorMetric.  K is linear,
so a HistorySum's weight operator is the sum of its terms' operators.  The
Heisenberg path conjugates every event to a reference time t_r first and
yields K^(Y) = T(t_r, t1) K(Y) T(tn, t_r), with the same weight under the plain
metrics.
"""

from typing import Union

import numpy as np

from chronos.base.ChronosError import ZeroConditionWeightError, DimensionMismatchError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.qalg.OperatorMetric import OperatorMetric
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.HistorySum import HistorySum


class HistoryWeights:

    @staticmethod
    def _checkDim(y, fam: PropagatorFamily) -> None:
        if (fam.getDim() is not None) and (y.getDim() != fam.getDim()):
            raise DimensionMismatchError("history dimension {} but dynamics dimension {}".format(
                y.getDim(), fam.getDim()), left=y.getDim(), right=fam.getDim())

    @staticmethod
    def weightOperator(y: Union[ProductHistory, HistorySum], fam: PropagatorFamily) -> np.ndarray:
        if isinstance(y, HistorySum):
            out = np.zeros((y.getDim(), y.getDim()), dtype=np.complex128)
            for term in y.getTerms():
                out = out + HistoryWeights.weightOperator(term, fam)
            return out
        HistoryWeights._checkDim(y, fam)
        dim = y.getDim()
        times = y.getGrid().getLabels()
        events = y.getEvents()
        k = events[0].getMatrix()
        for j in range(1, len(times)):
            k = k @ fam.propagator(times[j - 1], times[j], dim) @ events[j].getMatrix()
        return k

    @staticmethod
    def heisenbergWeightOperator(y: Union[ProductHistory, HistorySum], fam: PropagatorFamily,
                                 tRef: float = None) -> np.ndarray:
        if isinstance(y, HistorySum):
            out = np.zeros((y.getDim(), y.getDim()), dtype=np.complex128)
            for term in y.getTerms():
                out = out + HistoryWeights.heisenbergWeightOperator(term, fam, tRef)
            return out
        HistoryWeights._checkDim(y, fam)
        dim = y.getDim()
        if (tRef is None):
            tRef = y.getGrid().first()
        k = np.eye(dim, dtype=np.complex128)
        for t, e in zip(y.getGrid(), y.getEvents()):
            hat = fam.propagator(tRef, t, dim) @ e.getMatrix() @ fam.propagator(t, tRef, dim)
            k = k @ hat
        return k

    @staticmethod
    def weight(y: Union[ProductHistory, HistorySum], fam: PropagatorFamily,
               metric: OperatorMetric = None) -> float:
        if (metric is None):
            metric = OperatorMetric.plain()
        k = HistoryWeights.weightOperator(y, fam)
        return float(np.real(metric.inner(k, k)))

    @staticmethod
    def isZeroWeight(w: float, dim: int, tol: float = None) -> bool:
        return w <= ChronosConfig.resolveTol(tol) * dim

    @staticmethod
    def theta(x: Union[ProductHistory, HistorySum], y: Union[ProductHistory, HistorySum],
              fam: PropagatorFamily, metric: OperatorMetric = None, tol: float = None) -> float:
        """W(XY) / W(Y), the weight ratio acting as a conditional probability."""
        tol = ChronosConfig.resolveTol(tol)
        x = HistorySum.of(x)
        y = HistorySum.of(y)
        wy = HistoryWeights.weight(y, fam, metric)
        if HistoryWeights.isZeroWeight(wy, y.getDim(), tol):
            raise ZeroConditionWeightError("conditioning history has weight {:.3e}".format(wy),
                                           weight=wy)
        xy = x.product(y, tol)
        if xy.isEmpty():
            return 0.0
        return HistoryWeights.weight(xy, fam, metric) / wy
