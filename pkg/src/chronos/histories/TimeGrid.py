# A strictly increasing list of times t1 < t2 < ... < tn at which history
# events are asserted.

from typing import List

from chronos.base.ChronosError import InvalidTimeGridError, UnknownTimeError


class TimeGrid:

    _labels: tuple = None

    def __init__(self, labels: List[float]):
        labels = tuple(float(t) for t in labels)
        if len(labels) == 0:
            raise InvalidTimeGridError("a time grid needs at least one time")
        for a, b in zip(labels, labels[1:]):
            if b <= a:
                raise InvalidTimeGridError(
                    "time grid must be strictly increasing, got {} after {}".format(b, a),
                    times=labels)
        self._labels = labels

    def getLabels(self) -> tuple:
        return self._labels

    def size(self) -> int:
        return len(self._labels)

    def first(self) -> float:
        return self._labels[0]

    def last(self) -> float:
        return self._labels[-1]

    def contains(self, t: float) -> bool:
        return float(t) in self._labels

    def indexOf(self, t: float) -> int:
        try:
            return self._labels.index(float(t))
        except ValueError:
            raise UnknownTimeError("time {} is not on grid {}".format(t, self._labels),
                                   time=t)

    def isSubsetOf(self, other: "TimeGrid") -> bool:
        return set(self._labels).issubset(other._labels)

    def union(self, other: "TimeGrid") -> "TimeGrid":
        return TimeGrid(sorted(set(self._labels) | set(other._labels)))

    def __eq__(self, other) -> bool:
        return isinstance(other, TimeGrid) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __repr__(self) -> str:
        return "TimeGrid({})".format(list(self._labels))
