import numpy as np
import pytest

from chronos.base.ChronosError import (NotHermitianError, NotIdempotentError,
    NonCommutingError, ZeroVectorError, DimensionMismatchError,
    DimensionLimitError, NonUnitaryError, InvalidTimeGridError, UnknownTimeError,
    InvalidDensityMatrixError, InvalidMetricError, NonFiniteError)
from chronos.qalg.CMatrix import CMatrix
from chronos.qalg.Ket import Ket
from chronos.qalg.Projector import Projector
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.qalg.OperatorMetric import OperatorMetric, MetricKind

from tests.helpers import SQRT_HALF, randomUnitary, randomKet, randomDecomposition


ZP = Projector.fromKets([Ket([1, 0])])
ZM = Projector.fromKets([Ket([0, 1])])
XP = Projector.fromKets([Ket([SQRT_HALF, SQRT_HALF])])


# ***********************************************************************
# kets

def test_ket_arithmetic():
    a = Ket([1, 0])
    b = Ket([0, 1])
    s = (a + b).normalized()
    assert s.norm() == pytest.approx(1.0)
    assert abs(s.inner(a)) == pytest.approx(SQRT_HALF)
    assert np.allclose((2 * a - b).getAmplitudes(), [2, -1])
    assert np.allclose((-a).getAmplitudes(), [-1, 0])


def test_ket_inner_is_conjugate_linear_in_the_first_argument():
    a = Ket([1j, 0])
    b = Ket([1, 0])
    assert a.inner(b) == pytest.approx(-1j)


def test_zero_ket_cannot_be_normalized():
    with pytest.raises(ZeroVectorError):
        Ket([0, 0, 0]).normalized()


def test_ket_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        Ket([1, 0]) + Ket([1, 0, 0])


@pytest.mark.parametrize("dim,k", [(3, -1), (3, 3), (1, 2)])
def test_basis_index_out_of_range(dim, k):
    with pytest.raises(DimensionMismatchError):
        Ket.basis(dim, k)


def test_dimension_cap():
    with pytest.raises(DimensionLimitError):
        CMatrix.checkDim(65)
    assert CMatrix.checkDim(64) == 64


@pytest.mark.parametrize("bad", [np.nan, np.inf, complex(0, -np.inf)])
def test_non_finite_entries_are_rejected(bad):
    with pytest.raises(NonFiniteError):
        Ket([bad, 0])
    with pytest.raises(NonFiniteError):
        CMatrix.validate([[1, bad], [0, 1]])
    with pytest.raises(NonFiniteError):
        Projector.make([[bad, 0], [0, 0]])


# ***********************************************************************
# projectors

def test_make_validates():
    assert Projector.make([[1, 0], [0, 0]]).getRank() == 1
    with pytest.raises(NotHermitianError):
        Projector.make([[1, 1], [0, 0]])
    with pytest.raises(NotIdempotentError):
        Projector.make([[0.5, 0], [0, 0.5]])
    with pytest.raises(DimensionMismatchError):
        Projector.make([[1, 0, 0], [0, 1, 0]])


def test_from_kets_drops_dependent_vectors():
    p = Projector.fromKets([Ket([1, 0, 0]), Ket([1, 1, 0]), Ket([2, 2, 0])])
    assert p.getRank() == 2
    assert p.isClose(Projector.make(np.diag([1, 1, 0])))


def test_from_kets_rejects_zero_ket():
    with pytest.raises(ZeroVectorError):
        Projector.fromKets([Ket([0, 0])])


def test_complement_and_identity():
    assert ZP.complement().isClose(ZM)
    assert Projector.identity(3).isIdentity()
    assert Projector.zero(3).isZero()
    assert Projector.identity(3).complement().isZero()


def test_commuting_meet_and_join():
    a = Projector.make(np.diag([1, 1, 0]))
    b = Projector.make(np.diag([0, 1, 1]))
    assert a.meet(b).isClose(Projector.make(np.diag([0, 1, 0])))
    assert a.join(b).isIdentity()
    assert a.meet(b).getRank() == 1


def test_meet_of_z_and_x_is_undefined():
    assert not ZP.commutes(XP)
    with pytest.raises(NonCommutingError):
        ZP.meet(XP)
    with pytest.raises(NonCommutingError):
        ZP.join(XP)


def test_orthogonality_and_containment():
    a = Projector.make(np.diag([1, 0, 0]))
    b = Projector.make(np.diag([1, 1, 0]))
    c = Projector.make(np.diag([0, 0, 1]))
    assert a.isContainedIn(b)
    assert not b.isContainedIn(a)
    assert a.isOrthogonalTo(c)
    assert not a.isOrthogonalTo(b)


def test_random_decomposition_adds_to_identity():
    rng = np.random.default_rng(7)
    parts = randomDecomposition(rng, 5, 3)
    total = sum(p.getMatrix() for p in parts)
    assert np.allclose(total, np.eye(5))
    assert sum(p.getRank() for p in parts) == 5


# ***********************************************************************
# propagators

def test_identity_family():
    fam = PropagatorFamily.identity(3, [0.0, 1.0, 2.0])
    assert np.allclose(fam.propagator(2.0, 0.0), np.eye(3))
    assert fam.lawDefect() <= 1e-12


def test_composition_and_inverse_laws():
    rng = np.random.default_rng(11)
    u1 = randomUnitary(rng, 4)
    u2 = randomUnitary(rng, 4)
    fam = PropagatorFamily([0.0, 1.0, 3.0], [u1, u2])
    assert np.allclose(fam.propagator(3.0, 0.0), u2 @ u1)
    assert np.allclose(fam.propagator(0.0, 3.0), (u2 @ u1).conj().T)
    assert np.allclose(fam.propagator(1.0, 1.0), np.eye(4))
    assert fam.lawDefect() <= 1e-9


def test_family_rejects_bad_input():
    with pytest.raises(NonUnitaryError):
        PropagatorFamily([0.0, 1.0], [np.diag([1.0, 2.0])])
    with pytest.raises(InvalidTimeGridError):
        PropagatorFamily([1.0, 0.0], [np.eye(2)])
    with pytest.raises(DimensionMismatchError):
        PropagatorFamily([0.0, 1.0], [])
    with pytest.raises(UnknownTimeError):
        PropagatorFamily.identity(2, [0.0, 1.0]).propagator(0.5, 0.0)


def test_hamiltonian_propagator():
    h = np.diag([0.5, 1.5])
    u = PropagatorFamily.unitaryFromHamiltonian(h, 1.0, 0.0)
    assert np.allclose(u, np.diag(np.exp(-1j * np.array([0.5, 1.5]))))
    fam = PropagatorFamily.fromHamiltonian(h, [0.0, 1.0, 2.5])
    assert np.allclose(fam.propagator(2.5, 0.0),
                       PropagatorFamily.unitaryFromHamiltonian(h, 2.5, 0.0))
    with pytest.raises(NotHermitianError):
        PropagatorFamily.unitaryFromHamiltonian([[0, 1], [0, 0]], 1.0, 0.0)


# ***********************************************************************
# operator metrics

def test_plain_metrics():
    rng = np.random.default_rng(3)
    a = randomUnitary(rng, 3)
    b = randomUnitary(rng, 3)
    expected = np.trace(a.conj().T @ b)
    assert OperatorMetric.plain().inner(a, b) == pytest.approx(expected)
    assert OperatorMetric(MetricKind.PLAIN_REAL).inner(a, b) == pytest.approx(expected.real)


def test_rho_metrics_match_traces():
    rng = np.random.default_rng(5)
    psi = randomKet(rng, 3)
    rho = psi.dyad()
    rhoPrime = np.eye(3) / 3
    a = randomUnitary(rng, 3)
    b = randomUnitary(rng, 3)
    m = OperatorMetric(MetricKind.INITIAL_FINAL_RHO, rho=rho, rhoPrime=rhoPrime)
    assert m.inner(a, b) == pytest.approx(np.trace(a.conj().T @ rho @ b @ rhoPrime))
    gram = m.gram([a, b])
    assert gram[0, 1] == pytest.approx(m.inner(a, b))
    assert gram[1, 0] == pytest.approx(m.inner(b, a))


def test_density_validation():
    with pytest.raises(InvalidDensityMatrixError):
        OperatorMetric.validateDensity(np.diag([0.5, 0.6]), 1e-9)
    with pytest.raises(InvalidDensityMatrixError):
        OperatorMetric.validateDensity(np.diag([1.5, -0.5]), 1e-9)
    with pytest.raises(InvalidMetricError):
        OperatorMetric(MetricKind.INITIAL_RHO)
