"""
Decomposition: a sample space of histories.  Its minimal elements F_i are
pairwise-orthogonal product histories on one grid whose sum is the cap: the
history identity, or a fixed-event cap A (.) I (.) ... (.) I when every
history is required to start with the event A.

Completeness is checked with the rank argument.  A sum of orthogonal
projectors is a projector whose rank is the sum of the ranks, so the sum
equals the cap exactly when every F_i lies under the cap and the ranks
add up to the rank of the cap (d^n for the identity).
"""

from typing import List, Optional

from chronos.base.ChronosError import (NotOrthogonalError, IncompleteSumError,
    DimensionMismatchError, IntermediateFixedEventError, InconsistentInputError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.qalg.Projector import Projector
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.TimeGrid import TimeGrid
from chronos.framework.ConsistencyReport import ConsistencyMode
from chronos.framework.ConsistencyChecker import ConsistencyChecker


class Decomposition:

    _grid: TimeGrid = None
    _minimal: tuple = None
    _cap: ProductHistory = None
    _fixedCap: bool = False
    _dropped: int = 0

    def __init__(self, grid: TimeGrid, minimal: List[ProductHistory], cap: ProductHistory,
                 fixedCap: bool, dropped: int = 0):
        # use build(); this constructor trusts its arguments
        self._grid = grid
        self._minimal = tuple(minimal)
        self._cap = cap
        self._fixedCap = fixedCap
        self._dropped = dropped

    @staticmethod
    def build(minimal: List[ProductHistory], cap: ProductHistory = None,
              tol: float = None) -> "Decomposition":
        tol = ChronosConfig.resolveTol(tol)
        if not minimal:
            raise IncompleteSumError("a decomposition needs at least one minimal element",
                                     deficit=None)
        dim = minimal[0].getDim()
        grid = minimal[0].getGrid()
        for f in minimal:
            if f.getDim() != dim:
                raise DimensionMismatchError("minimal elements have dimensions {} and {}".format(
                    dim, f.getDim()))
            grid = grid.union(f.getGrid())
        if (cap is not None):
            if cap.getDim() != dim:
                raise DimensionMismatchError("cap dimension {} but elements have {}".format(
                    cap.getDim(), dim))
            grid = grid.union(cap.getGrid())
            cap = cap.extendTo(grid)
            fixed = not cap.isIdentity()
        else:
            cap = ProductHistory.identity(grid, dim)
            fixed = False

        kept = [f.extendTo(grid) for f in minimal if not f.isZero()]
        dropped = len(minimal) - len(kept)
        if dropped:
            Logger.info("dropped {} zero minimal element(s)".format(dropped), "framework")

        for i in range(len(kept)):
            for j in range(i + 1, len(kept)):
                if not kept[i].isOrthogonalTo(kept[j], tol):
                    raise NotOrthogonalError(
                        "minimal elements {} and {} are not orthogonal".format(i, j),
                        pair=(i, j))
        if fixed:
            for i, f in enumerate(kept):
                if not f.isContainedIn(cap, tol):
                    raise IncompleteSumError(
                        "minimal element {} does not lie under the cap".format(i), element=i)
        total = sum(f.rank() for f in kept)
        deficit = cap.rank() - total
        if deficit != 0:
            raise IncompleteSumError(
                "minimal elements have total rank {} but the cap has rank {} (deficit {})".format(
                    total, cap.rank(), deficit),
                deficit=deficit)
        return Decomposition(grid, kept, cap, fixed, dropped)

    @staticmethod
    def trivial(grid: TimeGrid, dim: int) -> "Decomposition":
        ident = ProductHistory.identity(grid, dim)
        return Decomposition(grid, [ident], ident, False)

    # ***********************************************************************

    def getGrid(self) -> TimeGrid:
        return self._grid

    def getMinimal(self) -> tuple:
        return self._minimal

    def getCap(self) -> ProductHistory:
        return self._cap

    def hasFixedCap(self) -> bool:
        return self._fixedCap

    def getDim(self) -> int:
        return self._minimal[0].getDim()

    def getDroppedCount(self) -> int:
        return self._dropped

    def size(self) -> int:
        return len(self._minimal)

    def isSingleTime(self) -> bool:
        return self._grid.size() == 1

    def extendTo(self, grid: TimeGrid) -> "Decomposition":
        if grid == self._grid:
            return self
        return Decomposition(grid, [f.extendTo(grid) for f in self._minimal],
                             self._cap.extendTo(grid), self._fixedCap, self._dropped)

    # ***********************************************************************

    def contains(self, y: ProductHistory, tol: float = None) -> Optional[tuple]:
        """
        Indicator of the minimal elements summing to y, or None when y is not
        a sum of minimal elements.  Each minimal element must lie either under
        y or orthogonal to it; a partial overlap means y is not in the algebra.
        """
        tol = ChronosConfig.resolveTol(tol)
        grid = self._grid.union(y.getGrid())
        y = y.extendTo(grid)
        minimal = self.extendTo(grid).getMinimal()
        if y.isZero():
            return tuple(False for _ in minimal)
        indicator = []
        total = 0
        for f in minimal:
            if f.isContainedIn(y, tol):
                indicator.append(True)
                total += f.rank()
            elif f.isOrthogonalTo(y, tol):
                indicator.append(False)
            else:
                return None
        if total != y.rank():
            return None
        return tuple(indicator)

    def completeFixedInitial(self, fam, metric=None, mode=None, tol: float = None) \
            -> "Decomposition":
        """
        Extend a consistent fixed-event family to a decomposition of the
        full identity by adding I - A.  The complement is written as orthogonal
        products, one per non-identity slot of the cap.  Only caps whose
        events sit at the first and/or last time are accepted; the added
        products are then orthogonal to every family member in the
        consistency sense as well.
        """
        tol = ChronosConfig.resolveTol(tol)
        if not self._fixedCap:
            return self
        if mode is None:
            mode = ConsistencyMode.STRONG
        report = ConsistencyChecker.check(self, fam, metric, mode, tol)
        if not report.getVerdict():
            raise InconsistentInputError(
                "fixed-event family is not consistent (worst {:.3e})".format(
                    report.getWorstMagnitude()),
                magnitude=report.getWorstMagnitude())
        slots = self._cap.nonIdentitySlots()
        last = self._grid.size() - 1
        if any((s != 0) and (s != last) for s in slots):
            raise IntermediateFixedEventError(
                "cap has events at intermediate times; build the full decomposition instead",
                slots=slots)
        events = self._cap.getEvents()
        dim = self.getDim()
        added = []
        for r, s in enumerate(slots):
            slotEvents = [Projector.identity(dim)] * self._grid.size()
            for prev in slots[:r]:
                slotEvents[prev] = events[prev]
            slotEvents[s] = events[s].complement()
            added.append(ProductHistory(self._grid, slotEvents))
        Logger.info("completed fixed-event family with {} complement element(s)".format(
            len(added)), "framework")
        return Decomposition.build(list(self._minimal) + added, None, tol)

    def __repr__(self) -> str:
        return "Decomposition({} minimal elements on {})".format(self.size(), self._grid)
