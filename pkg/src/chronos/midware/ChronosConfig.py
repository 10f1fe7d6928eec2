"""
ChronosConfig: process-wide defaults for the engine.  Values start from the
built-in defaults and are overridden by environment variables:

    CHRONOS_TOL         structural tolerance (hermiticity, idempotence,
                        commutation, orthogonality, consistency)
    CHRONOS_TOL_PROB    probability band for true/false verdicts
    CHRONOS_MAX_DIM     soft cap on the single-time Hilbert space dimension
    CHRONOS_WORKERS     thread pool size for query evaluation

A scenario may set its own tolerance and cli flags win over everything; those
overrides are passed explicitly and never written back here.
"""

import os

from chronos.base.ChronosError import InvalidConfigError


class ChronosConfig:
    DEFAULT_TOL = 1e-9
    DEFAULT_TOL_PROB = 1e-9
    DEFAULT_MAX_DIM = 64
    DEFAULT_WORKERS = 4

    _tol: float = None
    _tolProb: float = None
    _maxDim: int = None
    _workers: int = None

    def __init__(self):
        self.reload()

    @staticmethod
    def _readEnv(name: str, default, cast):
        raw = os.getenv(name)
        if (raw is None) or (raw.strip() == ""):
            return default
        try:
            value = cast(raw)
        except ValueError:
            raise InvalidConfigError("{}={!r} is not a valid {}".format(
                name, raw, cast.__name__), variable=name, value=raw)
        if value <= 0:
            raise InvalidConfigError("{} must be positive".format(name),
                                     variable=name, value=raw)
        return value

    def reload(self) -> None:
        self._tol = self._readEnv("CHRONOS_TOL", self.DEFAULT_TOL, float)
        self._tolProb = self._readEnv("CHRONOS_TOL_PROB", self.DEFAULT_TOL_PROB, float)
        self._maxDim = self._readEnv("CHRONOS_MAX_DIM", self.DEFAULT_MAX_DIM, int)
        self._workers = self._readEnv("CHRONOS_WORKERS", self.DEFAULT_WORKERS, int)

    def getTol(self) -> float:
        return self._tol

    def getTolProb(self) -> float:
        return self._tolProb

    def getMaxDim(self) -> int:
        return self._maxDim

    def getWorkers(self) -> int:
        return self._workers

    def getUserDir(self) -> str:
        return os.path.join(os.path.expanduser("~"), ".chronos")

    def resolveTol(self, tol: float = None) -> float:
        if (tol is None):
            return self._tol
        return tol

    def resolveTolProb(self, tolProb: float = None) -> float:
        if (tolProb is None):
            return self._tolProb
        return tolProb


# module-level singleton
ChronosConfig = ChronosConfig()
