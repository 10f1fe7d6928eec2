# An element of a decomposition's Boolean algebra: an indicator over its
# minimal elements.  Boolean operations act bitwise; negation complements
# against the decomposition's cap.

from typing import List

from chronos.base.ChronosError import OwnerMismatchError, DimensionMismatchError
from chronos.histories.HistorySum import HistorySum


class AlgebraElement:

    _owner = None
    _indicator: tuple = None

    def __init__(self, owner, indicator: List[bool]):
        indicator = tuple(bool(b) for b in indicator)
        if len(indicator) != owner.size():
            raise DimensionMismatchError(
                "indicator has {} entries for {} minimal elements".format(
                    len(indicator), owner.size()))
        self._owner = owner
        self._indicator = indicator

    @staticmethod
    def full(owner) -> "AlgebraElement":
        return AlgebraElement(owner, [True] * owner.size())

    @staticmethod
    def empty(owner) -> "AlgebraElement":
        return AlgebraElement(owner, [False] * owner.size())

    @staticmethod
    def minimal(owner, i: int) -> "AlgebraElement":
        return AlgebraElement(owner, [j == i for j in range(owner.size())])

    def getOwner(self):
        return self._owner

    def getIndicator(self) -> tuple:
        return self._indicator

    def indices(self) -> List[int]:
        return [i for i, b in enumerate(self._indicator) if b]

    def isEmpty(self) -> bool:
        return not any(self._indicator)

    def isFull(self) -> bool:
        return all(self._indicator)

    def _check(self, other: "AlgebraElement") -> None:
        if other._owner is not self._owner:
            raise OwnerMismatchError("elements belong to different decompositions")

    def negate(self) -> "AlgebraElement":
        return AlgebraElement(self._owner, [not b for b in self._indicator])

    def meet(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self._owner,
                              [a and b for a, b in zip(self._indicator, other._indicator)])

    def join(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self._owner,
                              [a or b for a, b in zip(self._indicator, other._indicator)])

    def isBelow(self, other: "AlgebraElement") -> bool:
        self._check(other)
        return all((not a) or b for a, b in zip(self._indicator, other._indicator))

    def historySum(self) -> HistorySum:
        minimal = self._owner.getMinimal()
        return HistorySum.fromOrthogonal([minimal[i] for i in self.indices()],
                                         self._owner.getDim(), self._owner.getGrid())

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and other._owner is self._owner
                and other._indicator == self._indicator)

    def __hash__(self) -> int:
        return hash((id(self._owner), self._indicator))

    def __repr__(self) -> str:
        return "AlgebraElement({})".format("".join("1" if b else "0" for b in self._indicator))
