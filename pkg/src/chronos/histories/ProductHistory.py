"""
ProductHistory: one event projector per slot of a time grid, standing for the
history projector E1 (.) E2 (.) ... (.) En on the history space.

The history-space operator is never built.  Products, orthogonality and
containment between product histories are all decided slot by slot on the
single-time d x d matrices.
"""

from typing import List, Optional

from chronos.base.ChronosError import (DimensionMismatchError, NotASupersetError,
    NonCommutingError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.qalg.Projector import Projector
from chronos.histories.TimeGrid import TimeGrid


class ProductHistory:

    _grid: TimeGrid = None
    _events: tuple = None

    def __init__(self, grid: TimeGrid, events: List[Projector]):
        events = tuple(events)
        if len(events) != grid.size():
            raise DimensionMismatchError("grid has {} slots but {} events were given".format(
                grid.size(), len(events)))
        dim = events[0].getDim()
        for e in events:
            if e.getDim() != dim:
                raise DimensionMismatchError("history events have dimensions {} and {}".format(
                    dim, e.getDim()), left=dim, right=e.getDim())
        self._grid = grid
        self._events = events

    @staticmethod
    def identity(grid: TimeGrid, dim: int) -> "ProductHistory":
        return ProductHistory(grid, [Projector.identity(dim)] * grid.size())

    @staticmethod
    def single(event: Projector, t: float) -> "ProductHistory":
        return ProductHistory(TimeGrid([t]), [event])

    # ***********************************************************************

    def getGrid(self) -> TimeGrid:
        return self._grid

    def getEvents(self) -> tuple:
        return self._events

    def getDim(self) -> int:
        return self._events[0].getDim()

    def eventAt(self, t: float) -> Projector:
        return self._events[self._grid.indexOf(t)]

    def rank(self) -> int:
        # rank on the history space: product of the slot ranks
        out = 1
        for e in self._events:
            out *= e.getRank()
        return out

    def isZero(self) -> bool:
        return any(e.isZero() for e in self._events)

    def isIdentity(self) -> bool:
        return all(e.isIdentity() for e in self._events)

    def nonIdentitySlots(self) -> List[int]:
        return [i for i, e in enumerate(self._events) if not e.isIdentity()]

    # ***********************************************************************
    # grid extension

    def extendTo(self, target: TimeGrid) -> "ProductHistory":
        if not self._grid.isSubsetOf(target):
            raise NotASupersetError("grid {} does not contain {}".format(
                list(target.getLabels()), list(self._grid.getLabels())))
        if target == self._grid:
            return self
        ident = Projector.identity(self.getDim())
        events = [self.eventAt(t) if self._grid.contains(t) else ident for t in target]
        return ProductHistory(target, events)

    def _aligned(self, other: "ProductHistory"):
        if self.getDim() != other.getDim():
            raise DimensionMismatchError("histories have dimensions {} and {}".format(
                self.getDim(), other.getDim()))
        grid = self._grid.union(other._grid)
        return self.extendTo(grid), other.extendTo(grid), grid

    # ***********************************************************************
    # slot-wise relations

    def isOrthogonalTo(self, other: "ProductHistory", tol: float = None) -> bool:
        tol = ChronosConfig.resolveTol(tol)
        a, b, _ = self._aligned(other)
        return any(x.isOrthogonalTo(y, tol) for x, y in zip(a._events, b._events))

    def isContainedIn(self, other: "ProductHistory", tol: float = None) -> bool:
        tol = ChronosConfig.resolveTol(tol)
        a, b, _ = self._aligned(other)
        if a.isZero():
            return True
        return all(x.isContainedIn(y, tol) for x, y in zip(a._events, b._events))

    def meet(self, other: "ProductHistory", tol: float = None) -> Optional["ProductHistory"]:
        """
        Slot-wise product on the union grid.  Returns None when the product is
        the zero history.  A nonzero product needs commuting events in every
        slot, otherwise it is not a projector.
        """
        tol = ChronosConfig.resolveTol(tol)
        a, b, grid = self._aligned(other)
        if any(x.isOrthogonalTo(y, tol) for x, y in zip(a._events, b._events)):
            return None
        events = []
        for t, x, y in zip(grid, a._events, b._events):
            try:
                events.append(x.meet(y, tol))
            except NonCommutingError as ex:
                raise NonCommutingError("events at time {} do not commute".format(t),
                                        time=t, **ex.getDetails())
        product = ProductHistory(grid, events)
        if product.isZero():
            return None
        return product

    def isClose(self, other: "ProductHistory", tol: float = None) -> bool:
        tol = ChronosConfig.resolveTol(tol)
        if self._grid != other._grid:
            return False
        return all(x.isClose(y, tol) for x, y in zip(self._events, other._events))

    def __repr__(self) -> str:
        parts = ["{}@{:g}".format(e.getRank(), t) for t, e in zip(self._grid, self._events)]
        return "ProductHistory(dim={}, ranks=[{}])".format(self.getDim(), ", ".join(parts))
