# A state vector on the single-time Hilbert space.

import numpy as np

from chronos.base.ChronosError import DimensionMismatchError, NonFiniteError, ZeroVectorError
from chronos.qalg.CMatrix import CMatrix


class Ket:
    """
    Immutable complex amplitude vector.  Supports the arithmetic the scenario
    language needs: sums, differences, scalar multiples and normalization.

    >>> Ket([3, 4]).norm()
    5.0
    """

    _amplitudes: np.ndarray = None

    def __init__(self, amplitudes):
        arr = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        CMatrix.checkDim(arr.shape[0])
        if not np.all(np.isfinite(arr)):
            raise NonFiniteError("ket has non-finite amplitudes")
        arr.setflags(write=False)
        self._amplitudes = arr

    @staticmethod
    def basis(dim: int, k: int) -> "Ket":
        if (k < 0) or (k >= dim):
            raise DimensionMismatchError("basis index {} outside dimension {}".format(
                k, dim), index=k, dim=dim)
        v = np.zeros(dim, dtype=np.complex128)
        v[k] = 1.0
        return Ket(v)

    def getDim(self) -> int:
        return self._amplitudes.shape[0]

    def getAmplitudes(self) -> np.ndarray:
        return self._amplitudes

    def norm(self) -> float:
        return float(np.linalg.norm(self._amplitudes))

    def normalized(self, tol: float = 0.0) -> "Ket":
        n = self.norm()
        if n <= tol or n == 0.0:
            raise ZeroVectorError("cannot normalize a zero ket", norm=n)
        return Ket(self._amplitudes / n)

    def inner(self, other: "Ket") -> complex:
        self._checkDim(other)
        return complex(np.vdot(self._amplitudes, other._amplitudes))

    def dyad(self) -> np.ndarray:
        return np.outer(self._amplitudes, self._amplitudes.conj())

    def _checkDim(self, other: "Ket") -> None:
        if self.getDim() != other.getDim():
            raise DimensionMismatchError("ket dimensions {} and {} differ".format(
                self.getDim(), other.getDim()), left=self.getDim(), right=other.getDim())

    def __add__(self, other: "Ket") -> "Ket":
        self._checkDim(other)
        return Ket(self._amplitudes + other._amplitudes)

    def __sub__(self, other: "Ket") -> "Ket":
        self._checkDim(other)
        return Ket(self._amplitudes - other._amplitudes)

    def __mul__(self, scalar: complex) -> "Ket":
        return Ket(self._amplitudes * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "Ket":
        return Ket(-self._amplitudes)

    def __repr__(self) -> str:
        return "Ket({})".format(np.array2string(self._amplitudes, precision=6))
