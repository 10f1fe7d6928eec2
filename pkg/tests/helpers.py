# Random generators and small fixtures shared by the test modules.

from typing import List

import numpy as np
from hypothesis import strategies as st

from chronos.qalg.Ket import Ket
from chronos.qalg.Projector import Projector
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.histories.TimeGrid import TimeGrid
from chronos.histories.ProductHistory import ProductHistory
from chronos.framework.Decomposition import Decomposition
from chronos.reasoning.Framework import Framework
from chronos.scenario.ScenarioParser import ScenarioParser
from chronos.scenario.ScenarioElaborator import ScenarioElaborator


SQRT_HALF = 1.0 / np.sqrt(2.0)


def randomUnitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def randomKet(rng: np.random.Generator, dim: int) -> Ket:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return Ket(v / np.linalg.norm(v))


def randomBasis(rng: np.random.Generator, dim: int) -> List[Ket]:
    u = randomUnitary(rng, dim)
    return [Ket(u[:, k]) for k in range(dim)]


def randomSizes(rng: np.random.Generator, dim: int, parts: int = None) -> List[int]:
    # positive block sizes adding up to dim
    if (parts is None):
        parts = int(rng.integers(1, dim + 1))
    cuts = sorted(rng.choice(np.arange(1, dim), size=parts - 1, replace=False)) \
        if parts > 1 else []
    edges = [0] + list(cuts) + [dim]
    return [b - a for a, b in zip(edges, edges[1:])]


def randomDecomposition(rng: np.random.Generator, dim: int, parts: int = None) \
        -> List[Projector]:
    """Mutually orthogonal projectors adding up to the identity."""
    u = randomUnitary(rng, dim)
    out = []
    start = 0
    for size in randomSizes(rng, dim, parts):
        out.append(Projector.fromKets([Ket(u[:, k]) for k in range(start, start + size)]))
        start += size
    return out


def randomFamily(rng: np.random.Generator, dim: int, times: List[float]) -> PropagatorFamily:
    return PropagatorFamily(times, [randomUnitary(rng, dim) for _ in times[1:]])


def singleTimeFramework(events: List[Projector], family: PropagatorFamily,
                        t: float = 0.0, name: str = None) -> Framework:
    dec = Decomposition.build([ProductHistory.single(e, t) for e in events])
    return Framework.fromDecomposition(dec, family, name=name)


def twoTimeHistories(first: List[Projector], last: List[Projector],
                     grid: TimeGrid) -> List[ProductHistory]:
    # initial partition times final partition; always consistent
    return [ProductHistory(grid, [a, b]) for a in first for b in last]


def bruteForceGram(histories: List[ProductHistory], family: PropagatorFamily) -> np.ndarray:
    """Pairwise Tr[K_j^dagger K_k] with every chain written out by hand."""
    ops = []
    for y in histories:
        times = y.getGrid().getLabels()
        k = y.getEvents()[0].getMatrix()
        for j in range(1, len(times)):
            forward = family.propagator(times[j], times[j - 1])
            k = k @ forward.conj().T @ y.getEvents()[j].getMatrix()
        ops.append(k)
    n = len(ops)
    gram = np.zeros((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            gram[a, b] = np.trace(ops[a].conj().T @ ops[b])
    return gram


def elaborateText(text: str, **kwargs):
    return ScenarioElaborator.elaborate(ScenarioParser.parseText(text), **kwargs)


# ***********************************************************************
# hypothesis strategies

@st.composite
def seeds(draw):
    return np.random.default_rng(draw(st.integers(min_value=0, max_value=2**32 - 1)))


@st.composite
def rngAndDim(draw, low: int = 2, high: int = 6):
    return draw(seeds()), draw(st.integers(min_value=low, max_value=high))
