# A history projector written as a sum of pairwise-orthogonal product
# histories, all carried to one common grid.

from typing import List, Union

from chronos.base.ChronosError import (NotOrthogonalError, NotAProjectorProductError,
    NonCommutingError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.TimeGrid import TimeGrid


class HistorySum:

    _terms: tuple = None
    _grid: TimeGrid = None
    _dim: int = None

    def __init__(self, terms: List[ProductHistory], tol: float = None, dim: int = None,
                 grid: TimeGrid = None):
        tol = ChronosConfig.resolveTol(tol)
        terms = [t for t in terms if not t.isZero()]
        if terms:
            common = grid if grid is not None else terms[0].getGrid()
            for t in terms:
                common = common.union(t.getGrid())
            terms = [t.extendTo(common) for t in terms]
            for i in range(len(terms)):
                for j in range(i + 1, len(terms)):
                    if not terms[i].isOrthogonalTo(terms[j], tol):
                        raise NotOrthogonalError(
                            "history sum terms {} and {} are not orthogonal".format(i, j),
                            pair=(i, j))
            self._grid = common
            self._dim = terms[0].getDim()
        else:
            self._grid = grid
            self._dim = dim
        self._terms = tuple(terms)

    @staticmethod
    def fromOrthogonal(terms: List[ProductHistory], dim: int, grid: TimeGrid) -> "HistorySum":
        # terms already known to be pairwise orthogonal on grid (minimal elements)
        out = HistorySum([], dim=dim, grid=grid)
        out._terms = tuple(terms)
        return out

    @staticmethod
    def of(y: Union[ProductHistory, "HistorySum"]) -> "HistorySum":
        if isinstance(y, HistorySum):
            return y
        return HistorySum([y], dim=y.getDim(), grid=y.getGrid())

    def getTerms(self) -> tuple:
        return self._terms

    def getGrid(self) -> TimeGrid:
        return self._grid

    def getDim(self) -> int:
        return self._dim

    def isEmpty(self) -> bool:
        return len(self._terms) == 0

    def product(self, other: "HistorySum", tol: float = None) -> "HistorySum":
        """
        XY as a sum of the pairwise slot-wise products.  Fails when a nonzero
        term product is not a projector or the products overlap.
        """
        tol = ChronosConfig.resolveTol(tol)
        out = []
        for x in self._terms:
            for y in other._terms:
                try:
                    p = x.meet(y, tol)
                except NonCommutingError as ex:
                    raise NotAProjectorProductError(
                        "history product is not a projector: {}".format(ex))
                if p is not None:
                    out.append(p)
        grid = self._grid
        if grid is not None and other._grid is not None:
            grid = grid.union(other._grid)
        try:
            return HistorySum(out, tol, dim=self._dim or other._dim, grid=grid)
        except NotOrthogonalError as ex:
            raise NotAProjectorProductError(
                "history product terms overlap: {}".format(ex))

    def __len__(self) -> int:
        return len(self._terms)
