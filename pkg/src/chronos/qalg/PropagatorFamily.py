"""
PropagatorFamily: the unitary time development operators T(t', t) on a grid of
times.  Only the maps between adjacent grid times are stored; any other
propagator is composed from them, with

    T(t, t) = I,   T(t'', t') T(t', t) = T(t'', t),   T(t', t)^dagger = T(t, t').
"""

from typing import List

import numpy as np
import scipy.linalg

from chronos.base.ChronosError import (NonUnitaryError, UnknownTimeError,
    NotHermitianError, DimensionMismatchError, InvalidTimeGridError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.qalg.CMatrix import CMatrix


class PropagatorFamily:

    _times: tuple = None
    _index: dict = None
    _maps: tuple = None     # _maps[j] = T(t_{j+1}, t_j)
    _dim: int = None

    def __init__(self, times: List[float], maps: List[np.ndarray], tol: float = None,
                 dim: int = None):
        tol = ChronosConfig.resolveTol(tol)
        times = tuple(float(t) for t in times)
        if len(times) == 0:
            raise InvalidTimeGridError("a propagator family needs at least one time")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise InvalidTimeGridError("times must be strictly increasing: {}".format(times),
                                       times=times)
        if len(maps) != len(times) - 1:
            raise DimensionMismatchError("{} times need {} adjacent maps, got {}".format(
                len(times), len(times) - 1, len(maps)))
        checked = []
        for j, m in enumerate(maps):
            arr = CMatrix.validate(m)
            defect = CMatrix.unitarityDefect(arr)
            if defect > tol:
                raise NonUnitaryError(
                    "T({}, {}) is not unitary (||U^dagger U - I|| = {:.3e})".format(
                        times[j + 1], times[j], defect),
                    bound=tol, magnitude=defect)
            arr.setflags(write=False)
            checked.append(arr)
        self._times = times
        self._index = {t: i for i, t in enumerate(times)}
        self._maps = tuple(checked)
        self._dim = checked[0].shape[0] if checked else dim
        if any(m.shape[0] != self._dim for m in checked):
            raise DimensionMismatchError("adjacent maps have differing dimensions")

    # ***********************************************************************
    # factories

    @staticmethod
    def identity(dim: int, times: List[float]) -> "PropagatorFamily":
        return PropagatorFamily(times, [CMatrix.identity(dim)] * (len(times) - 1), dim=dim)

    @staticmethod
    def unitaryFromHamiltonian(h, tTo: float, tFrom: float, tol: float = None) -> np.ndarray:
        # exp[-i (tTo - tFrom) H], hbar = 1
        tol = ChronosConfig.resolveTol(tol)
        arr = CMatrix.validate(h)
        herm = CMatrix.hermiticityDefect(arr)
        if herm > tol:
            raise NotHermitianError(
                "Hamiltonian is not Hermitian (||H - H^dagger|| = {:.3e})".format(herm),
                bound=tol, magnitude=herm)
        return scipy.linalg.expm(-1j * (float(tTo) - float(tFrom)) * arr)

    @staticmethod
    def fromHamiltonian(h, times: List[float], tol: float = None) -> "PropagatorFamily":
        times = [float(t) for t in times]
        maps = [PropagatorFamily.unitaryFromHamiltonian(h, b, a, tol)
                for a, b in zip(times, times[1:])]
        fam = PropagatorFamily(times, maps, tol, dim=CMatrix.validate(h).shape[0])
        Logger.debug("built Hamiltonian propagators on {} times".format(len(times)), "qalg")
        return fam

    # ***********************************************************************

    def getTimes(self) -> tuple:
        return self._times

    def getDim(self) -> int:
        return self._dim

    def hasTime(self, t: float) -> bool:
        return float(t) in self._index

    def _indexOf(self, t: float) -> int:
        try:
            return self._index[float(t)]
        except KeyError:
            raise UnknownTimeError("time {} is not on the propagator grid {}".format(
                t, self._times), time=t)

    def propagator(self, tTo: float, tFrom: float, dim: int = None) -> np.ndarray:
        i = self._indexOf(tTo)
        j = self._indexOf(tFrom)
        d = self._dim if self._dim is not None else dim
        if d is None:
            raise DimensionMismatchError("single-time family needs an explicit dimension")
        if i == j:
            return np.eye(d, dtype=np.complex128)
        if i < j:
            return CMatrix.dagger(self.propagator(tFrom, tTo, d))
        out = np.eye(d, dtype=np.complex128)
        for k in range(j, i):
            out = self._maps[k] @ out
        return out

    def lawDefect(self) -> float:
        """Largest violation of the composition and inverse laws over all time triples."""
        worst = 0.0
        for a in self._times:
            for b in self._times:
                tab = self.propagator(b, a)
                worst = max(worst, CMatrix.norm(tab - CMatrix.dagger(self.propagator(a, b))))
                for c in self._times:
                    worst = max(worst, CMatrix.norm(
                        self.propagator(c, b) @ tab - self.propagator(c, a)))
        return worst
