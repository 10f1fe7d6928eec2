# What is known before a question is asked: framework elements asserted true,
# or a single probability distribution on one framework.  With neither, the
# data is complete ignorance and only the dynamics and the dimension are
# carried.

from typing import List, Tuple

from chronos.base.ChronosError import OwnerMismatchError, UnsupportedDataError
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.framework.AlgebraElement import AlgebraElement


class InitialData:

    _items: tuple = None
    _distribution = None
    _family: PropagatorFamily = None
    _dim: int = None

    def __init__(self, family: PropagatorFamily, dim: int,
                 items: List[Tuple[object, AlgebraElement]] = None, distribution=None):
        items = tuple(items or [])
        for f, e in items:
            if e.getOwner() is not f.getDecomposition():
                raise OwnerMismatchError("asserted element does not belong to framework {}".format(
                    f.getName()))
        if (distribution is not None) and items:
            raise UnsupportedDataError(
                "a probability distribution cannot be combined with other data items")
        self._items = items
        self._distribution = distribution
        self._family = family
        self._dim = dim

    @staticmethod
    def ignorance(family: PropagatorFamily, dim: int) -> "InitialData":
        return InitialData(family, dim)

    def getItems(self) -> tuple:
        return self._items

    def getDistribution(self):
        return self._distribution

    def getFamily(self) -> PropagatorFamily:
        return self._family

    def getDim(self) -> int:
        return self._dim

    def isIgnorance(self) -> bool:
        return (not self._items) and (self._distribution is None)
