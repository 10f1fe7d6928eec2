# A probability distribution over a framework's minimal elements.  Values are
# nonnegative, sum to one, and vanish on minimal elements of zero weight
# (histories the dynamics forbids).

from typing import List

from chronos.base.ChronosError import (NegativeProbabilityError, NotNormalizedError,
    PositiveOnZeroWeightError, DimensionMismatchError, OwnerMismatchError,
    ZeroConditionWeightError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.framework.AlgebraElement import AlgebraElement


class ProbabilityDistribution:

    _owner = None
    _values: tuple = None
    _tolProb: float = None

    def __init__(self, owner, values: List[float], tolProb: float):
        # use assign(); this constructor trusts its arguments
        self._owner = owner
        self._values = tuple(float(v) for v in values)
        self._tolProb = tolProb

    @staticmethod
    def assign(f, values: List[float], tolProb: float = None) -> "ProbabilityDistribution":
        tolProb = ChronosConfig.resolveTolProb(tolProb)
        values = [float(v) for v in values]
        if len(values) != f.size():
            raise DimensionMismatchError("{} values for {} minimal elements".format(
                len(values), f.size()))
        for i, v in enumerate(values):
            if v < -tolProb:
                raise NegativeProbabilityError(
                    "minimal element {} has probability {:.3e}".format(i, v), element=i, value=v)
        total = sum(values)
        if abs(total - 1.0) > tolProb:
            raise NotNormalizedError("probabilities sum to {:.12g}".format(total),
                                     bound=tolProb, magnitude=abs(total - 1.0))
        for i, v in enumerate(values):
            if f.isZeroWeight(i) and v > tolProb:
                raise PositiveOnZeroWeightError(
                    "minimal element {} has zero weight but probability {:.3e}".format(i, v),
                    element=i, value=v)
        # clip rounding noise
        values = [0.0 if v <= 0.0 or f.isZeroWeight(i) else v for i, v in enumerate(values)]
        return ProbabilityDistribution(f, values, tolProb)

    @staticmethod
    def pointMass(f, i: int, tolProb: float = None) -> "ProbabilityDistribution":
        return ProbabilityDistribution.assign(f, [1.0 if j == i else 0.0 for j in range(f.size())],
                                              tolProb)

    @staticmethod
    def uniform(f, tolProb: float = None) -> "ProbabilityDistribution":
        n = f.size()
        return ProbabilityDistribution.assign(f, [1.0 / n] * n, tolProb)

    def getOwner(self):
        return self._owner

    def getValues(self) -> tuple:
        return self._values

    def support(self) -> List[int]:
        return [i for i, v in enumerate(self._values) if v > 0.0]

    def probabilityOf(self, e: AlgebraElement) -> float:
        if e.getOwner() is not self._owner.getDecomposition():
            raise OwnerMismatchError("element does not belong to this distribution's framework")
        return sum(self._values[i] for i in e.indices())

    def conditional(self, a: AlgebraElement, b: AlgebraElement) -> float:
        pb = self.probabilityOf(b)
        if pb <= self._tolProb:
            raise ZeroConditionWeightError("condition has probability {:.3e}".format(pb),
                                           probability=pb)
        return self.probabilityOf(a.meet(b)) / pb

    def __repr__(self) -> str:
        return "ProbabilityDistribution({})".format(
            ", ".join("{:.6g}".format(v) for v in self._values))
