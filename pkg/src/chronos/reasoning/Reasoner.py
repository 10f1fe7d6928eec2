"""
Reasoner: moves probabilities between frameworks and answers questions.

Probabilities only ever travel from a framework to one of its refinements,
by the refinement rule

    Pr'(G) = sum_i  W(G F_i) / W(F_i)  Pr(F_i),

with terms of zero probability skipped.  There is deliberately no coarsening
operation.  Initial data given as several true framework elements is combined
in the coarsest common refinement of their frameworks, as a point mass on the
intersection of the asserted elements.

A query is answered in the coarsest framework that refines the data framework
and contains the question: every data element carrying probability is split
by the target and condition events {E, I - E} at their times.  If that
candidate is not consistent, or its events fail to commute, the question is
meaningless.
"""

import itertools
from typing import List, Optional, Sequence, Tuple, Union

from chronos.base.ChronosError import (NotARefinementError, NonCommutingFrameworksError,
    InconsistentRefinementError, InconsistentFrameworkError, IncompatibleDataError,
    ZeroWeightDataError, ZeroConditionWeightError, NonCommutingError, OwnerMismatchError)
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.qalg.OperatorMetric import OperatorMetric
from chronos.qalg.Projector import Projector
from chronos.histories.TimeGrid import TimeGrid
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.HistoryWeights import HistoryWeights
from chronos.framework.Decomposition import Decomposition
from chronos.framework.AlgebraElement import AlgebraElement
from chronos.framework.ConsistencyReport import ConsistencyMode
from chronos.framework.ConsistencyChecker import ConsistencyChecker
from chronos.reasoning.Framework import Framework
from chronos.reasoning.ProbabilityDistribution import ProbabilityDistribution
from chronos.reasoning.InitialData import InitialData
from chronos.reasoning.Verdict import Verdict, VerdictKind, Classification


Histories = Union[ProductHistory, Sequence[ProductHistory]]


def _asList(h: Optional[Histories]) -> List[ProductHistory]:
    if (h is None):
        return []
    if isinstance(h, ProductHistory):
        return [h]
    return list(h)


class Reasoner:

    # ***********************************************************************
    # refinement

    def isRefinement(self, coarse: Framework, fine: Framework) -> bool:
        if coarse.getDim() != fine.getDim():
            return False
        fineDec = fine.getDecomposition()
        return all(fineDec.contains(f, fine.getTol()) is not None
                   for f in coarse.getDecomposition().getMinimal())

    def refineDistribution(self, pr: ProbabilityDistribution, fine: Framework,
                           tolProb: float = None) -> ProbabilityDistribution:
        tolProb = ChronosConfig.resolveTolProb(tolProb)
        coarse = pr.getOwner()
        fineDec = fine.getDecomposition()
        indicators = []
        for i, f in enumerate(coarse.getDecomposition().getMinimal()):
            indicator = fineDec.contains(f, fine.getTol())
            if (indicator is None):
                raise NotARefinementError(
                    "minimal element {} of {} is not a sum of minimal elements of {}".format(
                        i, coarse.getName(), fine.getName()), element=i)
            indicators.append(indicator)

        weights = fine.getWeights()
        values = [0.0] * fine.size()
        for indicator, p in zip(indicators, pr.getValues()):
            if p <= 0.0:
                continue
            # weights inside the zero band count as exactly zero
            selected = [k for k, b in enumerate(indicator) if b and not fine.isZeroWeight(k)]
            wF = sum(weights[k] for k in selected)
            if wF <= 0.0:
                continue
            for k in selected:
                values[k] += weights[k] / wF * p
        return ProbabilityDistribution.assign(fine, values, tolProb)

    # ***********************************************************************
    # compatibility

    def _checkCommuting(self, decs: List[Decomposition], tol: float) -> None:
        for a, b in itertools.combinations(range(len(decs)), 2):
            for x in decs[a].getMinimal():
                for y in decs[b].getMinimal():
                    for t, ex, ey in zip(decs[a].getGrid(), x.getEvents(), y.getEvents()):
                        if not ex.commutes(ey, tol):
                            Logger.info("frameworks {} and {} declared incompatible: events "
                                        "at time {:g} do not commute".format(a, b, t),
                                        "reasoning")
                            raise NonCommutingFrameworksError(
                                "frameworks {} and {} have non-commuting events at time {:g}"
                                .format(a, b, t), frameworks=(a, b), time=t)

    def generateCommon(self, fs: List[Framework], tol: float = None) -> Framework:
        """
        The coarsest common refinement: every nonzero slot-wise product of one
        minimal element from each framework.  Raises NonCommutingFrameworksError
        or InconsistentRefinementError when the frameworks are incompatible.
        """
        tol = ChronosConfig.resolveTol(tol)
        if len(fs) == 1:
            return fs[0]
        grid = fs[0].getGrid()
        for f in fs[1:]:
            grid = grid.union(f.getGrid())
        decs = [f.getDecomposition().extendTo(grid) for f in fs]
        self._checkCommuting(decs, tol)

        products = []
        for combo in itertools.product(*[d.getMinimal() for d in decs]):
            product = combo[0]
            for y in combo[1:]:
                product = product.meet(y, tol)
                if (product is None):
                    break
            if (product is not None):
                products.append(product)

        cap = None
        for d in decs:
            if d.hasFixedCap():
                cap = d.getCap() if (cap is None) else cap.meet(d.getCap(), tol)
                if (cap is None):
                    raise InconsistentRefinementError("the frameworks' fixed events exclude "
                                                      "each other")
        generated = Decomposition.build(products, cap, tol)
        first = fs[0]
        try:
            return Framework.fromDecomposition(generated, first.getFamily(), first.getMetric(),
                                               first.getMode(), tol, "generated")
        except InconsistentFrameworkError as ex:
            raise InconsistentRefinementError(
                "common refinement is not consistent: {}".format(ex.msg), **ex.getDetails())

    def compatible(self, fs: List[Framework], tol: float = None) -> bool:
        try:
            self.generateCommon(fs, tol)
        except (NonCommutingFrameworksError, InconsistentRefinementError):
            return False
        return True

    # ***********************************************************************
    # data

    def combineInitialData(self, data: InitialData, mode: ConsistencyMode = None,
                           metric: OperatorMetric = None, tol: float = None,
                           tolProb: float = None) -> Tuple[Framework, ProbabilityDistribution]:
        tol = ChronosConfig.resolveTol(tol)
        tolProb = ChronosConfig.resolveTolProb(tolProb)
        if (data.getDistribution() is not None):
            dist = data.getDistribution()
            return dist.getOwner(), dist

        items = data.getItems()
        if not items:
            if (mode is None):
                mode = ConsistencyMode.STRONG
            fam = data.getFamily()
            fw = Framework.trivial(fam, data.getDim(), TimeGrid([fam.getTimes()[0]]),
                                   metric, mode, tol)
            return fw, ProbabilityDistribution.assign(fw, [1.0], tolProb)

        if len(items) == 1:
            fw = items[0][0]
        else:
            try:
                fw = self.generateCommon([f for f, _ in items], tol)
            except (NonCommutingFrameworksError, InconsistentRefinementError) as ex:
                raise IncompatibleDataError("data frameworks are incompatible: {}".format(ex.msg),
                                            **ex.getDetails())

        # D = D_1 D_2 ... as the intersection of the items' indicators in fw
        dec = fw.getDecomposition()
        indicator = [True] * fw.size()
        for f, e in items:
            below = [False] * fw.size()
            for i in e.indices():
                sub = dec.contains(f.getDecomposition().getMinimal()[i], tol)
                if (sub is None):
                    raise NotARefinementError("data element of {} is not in the combined "
                                              "framework".format(f.getName()))
                below = [a or b for a, b in zip(below, sub)]
            indicator = [a and b for a, b in zip(indicator, below)]

        weights = fw.getWeights()
        wD = sum(w for w, b in zip(weights, indicator) if b)
        if HistoryWeights.isZeroWeight(wD, fw.getDim(), tol):
            raise ZeroWeightDataError("the combined data has weight {:.3e}".format(wD), weight=wD)
        values = [w / wD if (b and not fw.isZeroWeight(i)) else 0.0
                  for i, (w, b) in enumerate(zip(weights, indicator))]
        return fw, ProbabilityDistribution.assign(fw, values, tolProb)

    # ***********************************************************************
    # questions

    @staticmethod
    def _partitions(histories: List[ProductHistory], grid: TimeGrid, tol: float):
        # distinct (slot, event) pairs, and for each history the indices it needs true
        partitions = []
        needs = []
        for h in histories:
            h = h.extendTo(grid)
            mine = []
            for s in h.nonIdentitySlots():
                e = h.getEvents()[s]
                for j, (slot, q) in enumerate(partitions):
                    if (slot == s) and q.isClose(e, tol):
                        mine.append(j)
                        break
                else:
                    partitions.append((s, e))
                    mine.append(len(partitions) - 1)
            needs.append(mine)
        return partitions, needs

    @staticmethod
    def _slotHistory(grid: TimeGrid, dim: int, s: int, e: Projector) -> ProductHistory:
        events = [Projector.identity(dim)] * grid.size()
        events[s] = e
        return ProductHistory(grid, events)

    def query(self, data: InitialData, target: Histories, conditions: Histories = None,
              mode: ConsistencyMode = None, metric: OperatorMetric = None,
              tol: float = None, tolProb: float = None) -> Verdict:
        tol = ChronosConfig.resolveTol(tol)
        tolProb = ChronosConfig.resolveTolProb(tolProb)
        targets = _asList(target)
        conds = _asList(conditions)

        try:
            dataFw, dist = self.combineInitialData(data, mode, metric, tol, tolProb)
        except (IncompatibleDataError, ZeroWeightDataError) as ex:
            Logger.info("data rejected: {}".format(ex), "query")
            return Verdict(VerdictKind.DATA_INCONSISTENT, note=str(ex))
        if (mode is None):
            mode = dataFw.getMode()
        if (metric is None):
            metric = dataFw.getMetric()

        grid = dataFw.getGrid()
        for h in targets + conds:
            grid = grid.union(h.getGrid())
        dataDec = dataFw.getDecomposition().extendTo(grid)
        dim = dataDec.getDim()
        partitions, needs = self._partitions(targets + conds, grid, tol)
        targetNeeds = set(j for n in needs[:len(targets)] for j in n)
        condNeeds = set(j for n in needs[len(targets):] for j in n)

        support = [i for i, p in enumerate(dist.getValues()) if p > 0.0]
        minimal = dataDec.getMinimal()

        # events of the question must commute with the data and with each other
        for j, (s, e) in enumerate(partitions):
            clash = any(not minimal[i].getEvents()[s].commutes(e, tol) for i in support) or \
                any(s == s2 and not e.commutes(e2, tol) for s2, e2 in partitions[j + 1:])
            if clash:
                note = "question events at time {:g} do not commute with the data or with " \
                       "each other".format(grid.getLabels()[s])
                Logger.info(note, "query")
                return Verdict(VerdictKind.MEANINGLESS, note=note)

        # candidate framework: support elements split by every partition
        elements = []
        labels = []
        splits = [(self._slotHistory(grid, dim, s, e),
                   self._slotHistory(grid, dim, s, e.complement())) for s, e in partitions]
        for i, f in enumerate(minimal):
            if i not in support:
                elements.append(f)
                labels.append(None)
                continue
            for choice in itertools.product((True, False), repeat=len(partitions)):
                product = f
                try:
                    for (yes, no), c in zip(splits, choice):
                        product = product.meet(yes if c else no, tol)
                        if (product is None):
                            break
                except NonCommutingError as ex:
                    return Verdict(VerdictKind.MEANINGLESS, note=str(ex))
                if (product is not None):
                    elements.append(product)
                    labels.append(choice)

        cap = dataDec.getCap() if dataDec.hasFixedCap() else None
        candidate = Decomposition.build(elements, cap, tol)
        report = ConsistencyChecker.check(candidate, dataFw.getFamily(), metric, mode, tol)
        if not report.getVerdict():
            Logger.info("no consistent framework holds the data and the question: {}"
                        .format(report), "query")
            return Verdict(VerdictKind.MEANINGLESS,
                           note="the coarsest framework containing the data and the question "
                                "is not consistent", report=report)
        fw = Framework(candidate, dataFw.getFamily(), report, metric, tol, "of-record")
        refined = self.refineDistribution(dist, fw, tolProb)

        pTC = 0.0
        pC = 0.0
        for label, p in zip(labels, refined.getValues()):
            if (label is None) or p <= 0.0:
                continue
            if all(label[j] for j in condNeeds):
                pC += p
                if all(label[j] for j in targetNeeds):
                    pTC += p
        if pC <= tolProb:
            raise ZeroConditionWeightError("conditions have probability {:.3e}".format(pC),
                                           probability=pC)
        p = min(1.0, max(0.0, pTC / pC))
        note = "data framework of {} elements split by {} question event(s); any other " \
               "coarsest framework gives the same probability".format(
                   dataFw.size(), len(partitions))
        Logger.debug("query answered with p = {:.12g} in {}".format(p, fw), "query")
        return Verdict.fromProbability(p, tolProb, fw, note, report)

    def classify(self, f: Framework, y: AlgebraElement) -> Classification:
        if y.getOwner() is not f.getDecomposition():
            raise OwnerMismatchError("element does not belong to framework {}".format(f.getName()))
        positive = [i for i in range(f.size()) if not f.isZeroWeight(i)]
        selected = set(y.indices())
        if all(i in selected for i in positive):
            return Classification.TAUTOLOGY
        if not any(i in selected for i in positive):
            return Classification.CONTRADICTION
        return Classification.CONTINGENT


# module-level singleton
Reasoner = Reasoner()
