# Helpers for the dense complex matrices used everywhere in the engine.  A
# CMatrix is a plain numpy complex128 array; this class only validates and
# measures them.

import numpy as np

from chronos.base.ChronosError import DimensionMismatchError, DimensionLimitError, NonFiniteError
from chronos.midware.ChronosConfig import ChronosConfig


class CMatrix:

    @staticmethod
    def checkDim(dim: int) -> int:
        if dim < 1:
            raise DimensionMismatchError("dimension must be at least 1", dim=dim)
        if dim > ChronosConfig.getMaxDim():
            raise DimensionLimitError(
                "dimension {} exceeds the configured cap {}".format(
                    dim, ChronosConfig.getMaxDim()),
                dim=dim, cap=ChronosConfig.getMaxDim())
        return dim

    @staticmethod
    def validate(m) -> np.ndarray:
        arr = np.array(m, dtype=np.complex128)
        if (arr.ndim != 2) or (arr.shape[0] != arr.shape[1]):
            raise DimensionMismatchError("matrix must be square, got shape {}".format(
                arr.shape), shape=arr.shape)
        CMatrix.checkDim(arr.shape[0])
        if not np.all(np.isfinite(arr)):
            raise NonFiniteError("matrix has non-finite entries")
        return arr

    @staticmethod
    def identity(dim: int) -> np.ndarray:
        return np.eye(CMatrix.checkDim(dim), dtype=np.complex128)

    @staticmethod
    def norm(m: np.ndarray) -> float:
        # largest entry magnitude
        if m.size == 0:
            return 0.0
        return float(np.max(np.abs(m)))

    @staticmethod
    def dagger(m: np.ndarray) -> np.ndarray:
        return m.conj().T

    @staticmethod
    def sameDim(a: np.ndarray, b: np.ndarray) -> None:
        if a.shape != b.shape:
            raise DimensionMismatchError("shapes {} and {} differ".format(
                a.shape, b.shape), left=a.shape, right=b.shape)

    @staticmethod
    def hermiticityDefect(m: np.ndarray) -> float:
        return CMatrix.norm(m - CMatrix.dagger(m))

    @staticmethod
    def unitarityDefect(m: np.ndarray) -> float:
        return CMatrix.norm(CMatrix.dagger(m) @ m - np.eye(m.shape[0]))

    @staticmethod
    def isUnitary(m: np.ndarray, tol: float) -> bool:
        return CMatrix.unitarityDefect(m) <= tol
