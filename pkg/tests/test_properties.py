# Randomized properties of weights, consistency and refinement.

from typing import List

import numpy as np
import pytest
from hypothesis import given, settings

from chronos.qalg.Ket import Ket
from chronos.qalg.Projector import Projector
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.histories.TimeGrid import TimeGrid
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.HistorySum import HistorySum
from chronos.histories.HistoryWeights import HistoryWeights
from chronos.framework.Decomposition import Decomposition
from chronos.framework.AlgebraElement import AlgebraElement
from chronos.framework.ConsistencyChecker import ConsistencyChecker
from chronos.framework.ConsistencyReport import ConsistencyMode
from chronos.reasoning.Framework import Framework
from chronos.reasoning.ProbabilityDistribution import ProbabilityDistribution
from chronos.reasoning.Reasoner import Reasoner

from tests.helpers import (randomUnitary, randomSizes, randomDecomposition, randomFamily,
    twoTimeHistories, bruteForceGram, rngAndDim)


CASES = settings(max_examples=1000, deadline=None)
GRID2 = TimeGrid([0, 1])
GRID3 = TimeGrid([0, 1, 2])


def nestedPartition(rng: np.random.Generator, dim: int):
    """A coarse and a finer decomposition at one time, the fine one refining the coarse one."""
    u = randomUnitary(rng, dim)
    cols = [Ket(u[:, k]) for k in range(dim)]
    fineSizes = randomSizes(rng, dim)
    fine = []
    start = 0
    for size in fineSizes:
        fine.append(list(range(start, start + size)))
        start += size
    groups = randomSizes(rng, len(fine)) if len(fine) > 1 else [1]
    coarse = []
    start = 0
    for g in groups:
        coarse.append([k for block in fine[start:start + g] for k in block])
        start += g

    def project(idx):
        return Projector.fromKets([cols[k] for k in idx])
    return [project(b) for b in coarse], [project(b) for b in fine]


def randomDistribution(rng: np.random.Generator, fw: Framework) -> ProbabilityDistribution:
    values = rng.dirichlet(np.ones(fw.size()))
    return ProbabilityDistribution.assign(fw, values.tolist())


def randomElement(rng: np.random.Generator, fw: Framework) -> AlgebraElement:
    return fw.element(rng.integers(0, 2, size=fw.size()).astype(bool).tolist())


def twoTimeFramework(rng, dim, first: List[Projector], fam) -> Framework:
    dec = Decomposition.build(twoTimeHistories(first, randomDecomposition(rng, dim), GRID2))
    return Framework.fromDecomposition(dec, fam)


def basisPartition(rng: np.random.Generator, u: np.ndarray) -> List[Projector]:
    """A random decomposition of the identity diagonal in the columns of u."""
    out = []
    start = 0
    for size in randomSizes(rng, u.shape[0]):
        out.append(Projector.fromKets([Ket(u[:, k]) for k in range(start, start + size)]))
        start += size
    return out


def threeTimeHistories(parts: List[List[Projector]]) -> List[ProductHistory]:
    return [ProductHistory(GRID3, [a, b, c]) for a in parts[0] for b in parts[1] for c in parts[2]]


# ***********************************************************************
# weights

@CASES
@given(rngAndDim(2, 5))
def test_weight_is_additive_on_consistent_families(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0])
    fw = twoTimeFramework(rng, dim, randomDecomposition(rng, dim), fam)
    e = randomElement(rng, fw)
    direct = HistoryWeights.weight(e.historySum(), fam)
    assert direct == pytest.approx(fw.weightOf(e), abs=1e-9)


@CASES
@given(rngAndDim(2, 5))
def test_heisenberg_invariance(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0, 2.0])
    events = [randomDecomposition(rng, dim)[0] for _ in range(3)]
    y = ProductHistory(GRID3, events)
    tRef = float(rng.choice(GRID3.getLabels()))
    k = HistoryWeights.heisenbergWeightOperator(y, fam, tRef)
    hat = float(np.real(np.trace(k.conj().T @ k)))
    assert hat == pytest.approx(HistoryWeights.weight(y, fam), abs=1e-9)


@CASES
@given(rngAndDim(2, 5))
def test_weights_of_identity_decomposition_add_to_dimension(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0])
    fw = twoTimeFramework(rng, dim, randomDecomposition(rng, dim), fam)
    assert sum(fw.getWeights()) == pytest.approx(dim, abs=1e-9)


# ***********************************************************************
# refinement

@CASES
@given(rngAndDim(2, 6))
def test_refinement_is_transitive_and_restricts_back(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0])
    coarseEvents, midEvents = nestedPartition(rng, dim)
    coarse = Framework.fromDecomposition(
        Decomposition.build([ProductHistory.single(p, 0) for p in coarseEvents]), fam)
    mid = Framework.fromDecomposition(
        Decomposition.build([ProductHistory.single(p, 0) for p in midEvents]), fam)
    fine = twoTimeFramework(rng, dim, midEvents, fam)

    assert Reasoner.isRefinement(coarse, mid)
    assert Reasoner.isRefinement(mid, fine)
    assert Reasoner.isRefinement(coarse, fine)

    pr = randomDistribution(rng, coarse)
    direct = Reasoner.refineDistribution(pr, fine)
    stepped = Reasoner.refineDistribution(Reasoner.refineDistribution(pr, mid), fine)
    assert direct.getValues() == pytest.approx(stepped.getValues(), abs=1e-9)

    for i, f in enumerate(coarse.getDecomposition().getMinimal()):
        assert direct.probabilityOf(fine.contains(f)) == pytest.approx(pr.getValues()[i],
                                                                       abs=1e-9)


@CASES
@given(rngAndDim(2, 6))
def test_probability_is_the_same_in_any_refinement(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0])
    events = randomDecomposition(rng, dim)
    coarse = Framework.fromDecomposition(
        Decomposition.build([ProductHistory.single(p, 0) for p in events]), fam)
    pr = randomDistribution(rng, coarse)
    a = randomElement(rng, coarse)
    history = a.historySum()

    probabilities = []
    for _ in range(2):
        fine = twoTimeFramework(rng, dim, events, fam)
        refined = Reasoner.refineDistribution(pr, fine)
        indicator = [False] * fine.size()
        for term in history.getTerms():
            for k in fine.contains(term).indices():
                indicator[k] = True
        probabilities.append(refined.probabilityOf(fine.element(indicator)))
    assert probabilities[0] == pytest.approx(probabilities[1], abs=1e-9)
    assert probabilities[0] == pytest.approx(pr.probabilityOf(a), abs=1e-9)


@CASES
@given(rngAndDim(2, 5))
def test_conditional_probability_is_theta(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0])
    events = randomDecomposition(rng, dim)
    start = Framework.fromDecomposition(
        Decomposition.build([ProductHistory.single(p, 0) for p in events]), fam)
    fine = twoTimeFramework(rng, dim, events, fam)
    pr = Reasoner.refineDistribution(ProbabilityDistribution.pointMass(start, 0), fine)
    d = fine.contains(ProductHistory.single(events[0], 0))
    a = randomElement(rng, fine)
    assert pr.conditional(a, d) == pytest.approx(fine.theta(a, d), abs=1e-9)
    if not a.meet(d).isEmpty():
        direct = HistoryWeights.theta(a.historySum(), HistorySum.of(d.historySum()), fam)
        assert direct == pytest.approx(fine.theta(a, d), abs=1e-9)


# ***********************************************************************
# consistency

@CASES
@given(rngAndDim(2, 3))
def test_consistency_does_not_depend_on_element_order(case):
    rng, dim = case
    fam = randomFamily(rng, dim, [0.0, 1.0, 2.0])
    histories = threeTimeHistories([randomDecomposition(rng, dim) for _ in range(3)])
    perm = rng.permutation(len(histories))
    report = ConsistencyChecker.check(Decomposition.build(histories), fam)
    shuffled = ConsistencyChecker.check(Decomposition.build([histories[i] for i in perm]), fam)

    assert shuffled.getVerdict() == report.getVerdict()
    assert shuffled.getWorstMagnitude() == pytest.approx(report.getWorstMagnitude(), abs=1e-12)
    if report.getVerdict():
        return
    # position j of the shuffled family holds element perm[j] of the original
    j, k = shuffled.getWorstPair()
    gram = np.abs(bruteForceGram(histories, fam))
    assert perm[j] != perm[k]
    assert gram[perm[j], perm[k]] >= report.getWorstMagnitude() - report.getThreshold() - 1e-9


@CASES
@given(rngAndDim(2, 3))
def test_strong_consistency_implies_weak(case):
    rng, dim = case
    commuting = bool(rng.integers(0, 2))
    if commuting:
        fam = PropagatorFamily.identity(dim, [0.0, 1.0, 2.0])
        u = randomUnitary(rng, dim)
        parts = [basisPartition(rng, u) for _ in range(3)]
    else:
        fam = randomFamily(rng, dim, [0.0, 1.0, 2.0])
        parts = [randomDecomposition(rng, dim) for _ in range(3)]
    dec = Decomposition.build(threeTimeHistories(parts))
    strong = ConsistencyChecker.check(dec, fam, mode=ConsistencyMode.STRONG)
    weak = ConsistencyChecker.check(dec, fam, mode=ConsistencyMode.WEAK)

    assert weak.getWorstMagnitude() <= strong.getWorstMagnitude() + 1e-12
    if commuting:
        assert strong.getVerdict()
    if strong.getVerdict():
        assert weak.getVerdict()
