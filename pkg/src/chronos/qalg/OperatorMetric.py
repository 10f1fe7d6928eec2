"""
OperatorMetric: the inner product on operators used to compare weight
operators.

    plain-complex       <A, B> = Tr[A^dagger B]
    plain-real          <A, B> = Re Tr[A^dagger B]
    initial-rho         <A, B> = Tr[A^dagger rho B]
    initial-final-rho   <A, B> = Tr[A^dagger rho B rho']

rho is the density matrix at the initial time and rho' the one at the final
time.  Both must be Hermitian, positive semidefinite and of unit trace.
"""

from enum import Enum
from typing import List

import numpy as np

from chronos.base.ChronosError import InvalidDensityMatrixError, InvalidMetricError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.qalg.CMatrix import CMatrix


class MetricKind(Enum):
    PLAIN_COMPLEX = "plain-complex"
    PLAIN_REAL = "plain-real"
    INITIAL_RHO = "initial-rho"
    INITIAL_FINAL_RHO = "initial-final-rho"


class OperatorMetric:

    _kind: MetricKind = None
    _rho: np.ndarray = None
    _rhoPrime: np.ndarray = None

    def __init__(self, kind: MetricKind = MetricKind.PLAIN_COMPLEX, rho=None,
                 rhoPrime=None, tol: float = None):
        tol = ChronosConfig.resolveTol(tol)
        self._kind = kind
        if (rho is not None):
            self._rho = OperatorMetric.validateDensity(rho, tol)
        if (rhoPrime is not None):
            self._rhoPrime = OperatorMetric.validateDensity(rhoPrime, tol)
        if kind in (MetricKind.INITIAL_RHO, MetricKind.INITIAL_FINAL_RHO) and self._rho is None:
            raise InvalidMetricError("{} metric needs an initial density matrix".format(
                kind.value))
        if kind == MetricKind.INITIAL_FINAL_RHO and self._rhoPrime is None:
            raise InvalidMetricError("initial-final-rho metric needs a final density matrix")

    @staticmethod
    def validateDensity(rho, tol: float) -> np.ndarray:
        arr = CMatrix.validate(rho)
        herm = CMatrix.hermiticityDefect(arr)
        if herm > tol:
            raise InvalidDensityMatrixError(
                "density matrix is not Hermitian ({:.3e})".format(herm),
                bound=tol, magnitude=herm)
        lowest = float(np.min(np.linalg.eigvalsh(0.5 * (arr + CMatrix.dagger(arr)))))
        if lowest < -tol:
            raise InvalidDensityMatrixError(
                "density matrix has negative eigenvalue {:.3e}".format(lowest),
                bound=-tol, magnitude=lowest)
        trace = float(np.real(np.trace(arr)))
        if abs(trace - 1.0) > tol:
            raise InvalidDensityMatrixError(
                "density matrix trace is {:.12g}, not 1".format(trace),
                bound=tol, magnitude=abs(trace - 1.0))
        arr.setflags(write=False)
        return arr

    @staticmethod
    def plain() -> "OperatorMetric":
        return OperatorMetric(MetricKind.PLAIN_COMPLEX)

    def getKind(self) -> MetricKind:
        return self._kind

    def getRho(self) -> np.ndarray:
        return self._rho

    def getRhoPrime(self) -> np.ndarray:
        return self._rhoPrime

    def _rightFactor(self, b: np.ndarray) -> np.ndarray:
        # B, rho B, or rho B rho' depending on kind; broadcasts over stacks
        if self._kind == MetricKind.INITIAL_RHO:
            return np.matmul(self._rho, b)
        if self._kind == MetricKind.INITIAL_FINAL_RHO:
            return np.matmul(np.matmul(self._rho, b), self._rhoPrime)
        return b

    def inner(self, a: np.ndarray, b: np.ndarray):
        CMatrix.sameDim(a, b)
        if self._rho is not None:
            CMatrix.sameDim(a, self._rho)
        value = complex(np.sum(a.conj() * self._rightFactor(b)))
        if self._kind == MetricKind.PLAIN_REAL:
            return value.real
        return value

    def gram(self, ops: List[np.ndarray]) -> np.ndarray:
        """Matrix of pairwise inner products <ops[j], ops[k]>."""
        if len(ops) == 0:
            return np.zeros((0, 0), dtype=np.complex128)
        stack = np.stack(ops)
        g = np.einsum("aij,bij->ab", stack.conj(), self._rightFactor(stack))
        if self._kind == MetricKind.PLAIN_REAL:
            return np.real(g).astype(np.complex128)
        return g

    def __repr__(self) -> str:
        return "OperatorMetric({})".format(self._kind.value)
