import numpy as np
import pytest

from chronos.base.ChronosError import (InvalidTimeGridError, UnknownTimeError,
    NotASupersetError, NonCommutingError, NotOrthogonalError, NotAProjectorProductError,
    ZeroConditionWeightError, DimensionMismatchError)
from chronos.qalg.Ket import Ket
from chronos.qalg.Projector import Projector
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.qalg.OperatorMetric import OperatorMetric, MetricKind
from chronos.histories.TimeGrid import TimeGrid
from chronos.histories.ProductHistory import ProductHistory
from chronos.histories.HistorySum import HistorySum
from chronos.histories.HistoryWeights import HistoryWeights

from tests.helpers import SQRT_HALF, randomFamily, randomDecomposition, bruteForceGram


I2 = Projector.identity(2)
ZP = Projector.fromKets([Ket([1, 0])])
ZM = ZP.complement()
XP = Projector.fromKets([Ket([SQRT_HALF, SQRT_HALF])])
XM = XP.complement()


# ***********************************************************************
# time grids

def test_grid_ordering_and_lookup():
    g = TimeGrid([0, 1.5, 3])
    assert g.size() == 3
    assert g.first() == 0.0 and g.last() == 3.0
    assert g.indexOf(1.5) == 1
    assert g.contains(3)
    with pytest.raises(UnknownTimeError):
        g.indexOf(2.0)


@pytest.mark.parametrize("labels", [[], [1.0, 1.0], [2.0, 1.0]])
def test_grid_rejects(labels):
    with pytest.raises(InvalidTimeGridError):
        TimeGrid(labels)


def test_grid_union():
    u = TimeGrid([0, 2]).union(TimeGrid([1, 2]))
    assert u.getLabels() == (0.0, 1.0, 2.0)
    assert TimeGrid([1]).isSubsetOf(u)
    assert not TimeGrid([5]).isSubsetOf(u)


# ***********************************************************************
# product histories

def test_extend_pads_with_identity():
    y = ProductHistory.single(ZP, 1.0)
    ext = y.extendTo(TimeGrid([0, 1, 2]))
    assert ext.nonIdentitySlots() == [1]
    assert ext.eventAt(1.0).isClose(ZP)
    with pytest.raises(NotASupersetError):
        ext.extendTo(TimeGrid([0, 1]))


def test_orthogonal_when_one_slot_is_orthogonal():
    a = ProductHistory(TimeGrid([0, 1]), [ZP, XP])
    b = ProductHistory(TimeGrid([0, 1]), [ZM, XP])
    c = ProductHistory(TimeGrid([0, 1]), [ZP, XM])
    assert a.isOrthogonalTo(b)
    assert a.isOrthogonalTo(c)
    assert not a.isOrthogonalTo(ProductHistory.single(ZP, 0))


def test_meet_on_union_grid():
    a = ProductHistory.single(ZP, 0)
    b = ProductHistory.single(XP, 1)
    m = a.meet(b)
    assert m.getGrid().getLabels() == (0.0, 1.0)
    assert m.rank() == 1
    assert a.meet(ProductHistory.single(ZM, 0)) is None


def test_meet_of_non_commuting_events_names_the_time():
    with pytest.raises(NonCommutingError) as info:
        ProductHistory.single(ZP, 2.0).meet(ProductHistory.single(XP, 2.0))
    assert info.value.getDetails()["time"] == 2.0


def test_containment():
    g = TimeGrid([0, 1])
    small = ProductHistory(g, [ZP, XP])
    big = ProductHistory(g, [ZP, I2])
    assert small.isContainedIn(big)
    assert not big.isContainedIn(small)


def test_rank_is_product_of_slot_ranks():
    p = Projector.make(np.diag([1, 1, 0]))
    y = ProductHistory(TimeGrid([0, 1, 2]), [p, Projector.identity(3), p])
    assert y.rank() == 2 * 3 * 2


def test_events_must_share_dimension():
    with pytest.raises(DimensionMismatchError):
        ProductHistory(TimeGrid([0, 1]), [ZP, Projector.identity(3)])


# ***********************************************************************
# history sums

def test_sum_requires_orthogonal_terms():
    HistorySum([ProductHistory.single(ZP, 0), ProductHistory.single(ZM, 0)])
    with pytest.raises(NotOrthogonalError):
        HistorySum([ProductHistory.single(ZP, 0), ProductHistory.single(XP, 0)])


def test_sum_product():
    x = HistorySum.of(ProductHistory.single(ZP, 0))
    y = HistorySum.of(ProductHistory.single(XP, 1))
    xy = x.product(y)
    assert len(xy) == 1
    assert xy.getGrid().size() == 2
    with pytest.raises(NotAProjectorProductError):
        x.product(HistorySum.of(ProductHistory.single(XP, 0)))


# ***********************************************************************
# weights

def test_weight_of_identity_history_is_dimension():
    rng = np.random.default_rng(1)
    fam = randomFamily(rng, 4, [0.0, 1.0, 2.0])
    y = ProductHistory.identity(TimeGrid([0, 1, 2]), 4)
    assert HistoryWeights.weight(y, fam) == pytest.approx(4.0)


def test_weight_operator_matches_hand_chain():
    rng = np.random.default_rng(2)
    fam = randomFamily(rng, 3, [0.0, 1.0, 2.0])
    events = [randomDecomposition(rng, 3, 2)[0] for _ in range(3)]
    y = ProductHistory(TimeGrid([0, 1, 2]), events)
    gram = bruteForceGram([y], fam)
    assert HistoryWeights.weight(y, fam) == pytest.approx(gram[0, 0].real)


def test_spin_half_weights():
    fam = PropagatorFamily.identity(2, [0.0, 1.0])
    g = TimeGrid([0, 1])
    assert HistoryWeights.weight(ProductHistory(g, [ZP, XP]), fam) == pytest.approx(0.5)
    assert HistoryWeights.weight(ProductHistory(g, [ZP, ZM]), fam) == pytest.approx(0.0)


def test_heisenberg_operator_has_the_same_weight():
    rng = np.random.default_rng(4)
    fam = randomFamily(rng, 3, [0.0, 1.0, 2.0])
    events = [randomDecomposition(rng, 3, 2)[1] for _ in range(3)]
    y = ProductHistory(TimeGrid([0, 1, 2]), events)
    k = HistoryWeights.heisenbergWeightOperator(y, fam, 1.0)
    m = OperatorMetric.plain()
    assert np.real(m.inner(k, k)) == pytest.approx(HistoryWeights.weight(y, fam))


def test_rho_weight_is_born_probability():
    psi = Ket([1, 0])
    metric = OperatorMetric(MetricKind.INITIAL_RHO, rho=psi.dyad())
    fam = PropagatorFamily.identity(2, [0.0, 1.0])
    y = ProductHistory(TimeGrid([0, 1]), [I2, XP])
    assert HistoryWeights.weight(y, fam, metric) == pytest.approx(0.5)


def test_theta():
    fam = PropagatorFamily.identity(2, [0.0, 1.0])
    z = ProductHistory.single(ZP, 0)
    x = ProductHistory.single(XP, 1)
    assert HistoryWeights.theta(x, z, fam) == pytest.approx(0.5)
    assert HistoryWeights.theta(ProductHistory.single(ZM, 0), z, fam) == 0.0
    with pytest.raises(ZeroConditionWeightError):
        HistoryWeights.theta(x, ProductHistory(TimeGrid([0, 1]), [ZP, ZM]), fam)


def test_zero_weight_threshold_scales_with_dimension():
    assert HistoryWeights.isZeroWeight(3e-9, 4, 1e-9)
    assert not HistoryWeights.isZeroWeight(5e-9, 4, 1e-9)
