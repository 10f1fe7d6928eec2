"""
Projector: an orthogonal projection operator on the single-time Hilbert space,
the representation of a quantum property.  Projectors are validated once at
construction (Hermitian, idempotent, integer trace) and carry their rank.

Lattice operations follow the event algebra: the complement of P is I - P,
and for commuting P and Q the meet is PQ and the join is P + Q - PQ.  Pairs
that do not commute have no meet or join; asking for one raises
NonCommutingError.
"""

from typing import List

import numpy as np

from chronos.base.ChronosError import (NotHermitianError, NotIdempotentError,
    NonIntegerTraceError, NonCommutingError, ZeroVectorError, DimensionMismatchError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.qalg.CMatrix import CMatrix
from chronos.qalg.Ket import Ket


class Projector:

    _matrix: np.ndarray = None
    _rank: int = None

    def __init__(self, matrix: np.ndarray, rank: int):
        # callers outside this module go through make() or fromKets()
        matrix = np.array(matrix, dtype=np.complex128)
        matrix.setflags(write=False)
        self._matrix = matrix
        self._rank = int(rank)

    # ***********************************************************************
    # construction

    @staticmethod
    def make(m, tol: float = None) -> "Projector":
        tol = ChronosConfig.resolveTol(tol)
        arr = CMatrix.validate(m)
        dim = arr.shape[0]
        herm = CMatrix.hermiticityDefect(arr)
        if herm > tol:
            raise NotHermitianError(
                "||P - P^dagger|| = {:.3e} exceeds tol {:.1e}".format(herm, tol),
                bound=tol, magnitude=herm)
        idem = CMatrix.norm(arr @ arr - arr)
        if idem > tol:
            raise NotIdempotentError(
                "||P^2 - P|| = {:.3e} exceeds tol {:.1e}".format(idem, tol),
                bound=tol, magnitude=idem)
        trace = float(np.real(np.trace(arr)))
        rank = int(round(trace))
        if (abs(trace - rank) > tol * dim) or (rank < 0):
            raise NonIntegerTraceError(
                "trace {:.12g} is not within {:.1e} of a nonnegative integer".format(
                    trace, tol * dim),
                bound=tol * dim, magnitude=abs(trace - rank))
        return Projector(arr, rank)

    @staticmethod
    def fromKets(kets: List[Ket], tol: float = None) -> "Projector":
        """
        Projector onto the span of the given kets.  The span is orthonormalized
        with modified Gram-Schmidt, each vector swept twice; vectors whose
        residual norm falls below tol*sqrt(dim) are linearly dependent and
        are dropped.
        """
        tol = ChronosConfig.resolveTol(tol)
        if not kets:
            raise ZeroVectorError("projector needs at least one ket")
        dim = kets[0].getDim()
        basis = []
        for k in kets:
            if k.getDim() != dim:
                raise DimensionMismatchError("ket dimensions {} and {} differ".format(
                    dim, k.getDim()), left=dim, right=k.getDim())
            w = k.normalized(tol).getAmplitudes().copy()
            for _ in range(2):
                for q in basis:
                    w = w - q * np.vdot(q, w)
            residual = np.linalg.norm(w)
            if residual < tol * np.sqrt(dim):
                continue
            basis.append(w / residual)
        q = np.array(basis).T
        return Projector(q @ q.conj().T, len(basis))

    @staticmethod
    def identity(dim: int) -> "Projector":
        return Projector(CMatrix.identity(dim), dim)

    @staticmethod
    def zero(dim: int) -> "Projector":
        CMatrix.checkDim(dim)
        return Projector(np.zeros((dim, dim), dtype=np.complex128), 0)

    # ***********************************************************************
    # accessors

    def getMatrix(self) -> np.ndarray:
        return self._matrix

    def getDim(self) -> int:
        return self._matrix.shape[0]

    def getRank(self) -> int:
        return self._rank

    def isZero(self) -> bool:
        return self._rank == 0

    def isIdentity(self) -> bool:
        return self._rank == self.getDim()

    # ***********************************************************************
    # lattice

    def _checkDim(self, q: "Projector") -> None:
        if self.getDim() != q.getDim():
            raise DimensionMismatchError("projector dimensions {} and {} differ".format(
                self.getDim(), q.getDim()), left=self.getDim(), right=q.getDim())

    def complement(self) -> "Projector":
        return Projector(np.eye(self.getDim()) - self._matrix, self.getDim() - self._rank)

    def commutes(self, q: "Projector", tol: float = None) -> bool:
        tol = ChronosConfig.resolveTol(tol)
        self._checkDim(q)
        a, b = self._matrix, q._matrix
        return CMatrix.norm(a @ b - b @ a) <= tol

    def _product(self, q: "Projector", tol: float) -> np.ndarray:
        if not self.commutes(q, tol):
            a, b = self._matrix, q._matrix
            raise NonCommutingError(
                "projectors do not commute (||PQ - QP|| = {:.3e})".format(
                    CMatrix.norm(a @ b - b @ a)),
                bound=tol, magnitude=CMatrix.norm(a @ b - b @ a))
        # symmetrized so the stored product stays Hermitian to rounding
        return 0.5 * (self._matrix @ q._matrix + q._matrix @ self._matrix)

    def meet(self, q: "Projector", tol: float = None) -> "Projector":
        tol = ChronosConfig.resolveTol(tol)
        m = self._product(q, tol)
        return Projector(m, round(float(np.real(np.trace(m)))))

    def join(self, q: "Projector", tol: float = None) -> "Projector":
        tol = ChronosConfig.resolveTol(tol)
        pq = self._product(q, tol)
        m = self._matrix + q._matrix - pq
        return Projector(m, round(float(np.real(np.trace(m)))))

    # ***********************************************************************
    # comparisons used by history and framework code

    def productNorm(self, q: "Projector") -> float:
        self._checkDim(q)
        return CMatrix.norm(self._matrix @ q._matrix)

    def isOrthogonalTo(self, q: "Projector", tol: float = None) -> bool:
        return self.productNorm(q) <= ChronosConfig.resolveTol(tol)

    def isContainedIn(self, q: "Projector", tol: float = None) -> bool:
        # P <= Q  iff  QP = P
        self._checkDim(q)
        return CMatrix.norm(q._matrix @ self._matrix - self._matrix) \
            <= ChronosConfig.resolveTol(tol)

    def isClose(self, q: "Projector", tol: float = None) -> bool:
        self._checkDim(q)
        return CMatrix.norm(self._matrix - q._matrix) <= ChronosConfig.resolveTol(tol)

    def __repr__(self) -> str:
        return "Projector(dim={}, rank={})".format(self.getDim(), self._rank)
