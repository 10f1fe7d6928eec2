"""
ScenarioElaborator: turns a parsed document into a Scenario.

Declarations are processed in two passes.  The first builds the space, kets,
projectors, unitaries, times, dynamics and density matrices in document order;
the propagator family and the metric are then assembled once.  The second pass
builds histories, frameworks (with their consistency checks), data and
queries, again in document order.  References must point backwards within a
pass.

Engine errors met on the way are re-raised as ScenarioError with the span of
the declaration being elaborated.
"""

import itertools
from typing import Dict, List, Optional

import numpy as np

from chronos.base.ChronosError import ChronosError, NonUnitaryError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.qalg.CMatrix import CMatrix
from chronos.qalg.Ket import Ket
from chronos.qalg.Projector import Projector
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.qalg.OperatorMetric import OperatorMetric, MetricKind
from chronos.histories.TimeGrid import TimeGrid
from chronos.histories.ProductHistory import ProductHistory
from chronos.framework.Decomposition import Decomposition
from chronos.framework.ConsistencyReport import ConsistencyMode
from chronos.framework.ConsistencyChecker import ConsistencyChecker
from chronos.reasoning.Framework import Framework
from chronos.reasoning.InitialData import InitialData
from chronos.reasoning.ProbabilityDistribution import ProbabilityDistribution
from chronos.scenario.ScenarioAst import Node, NodeKind, ScenarioAst
from chronos.scenario.ScenarioError import ScenarioError, ScenarioErrorCode
from chronos.scenario.Scenario import Scenario, ScenarioQuery, ScenarioFramework


class ScenarioElaborator:

    def __init__(self, ast: ScenarioAst, mode: ConsistencyMode = None, tol: float = None):
        self._ast = ast
        self._name = ast.getSourceName()
        self._mode = ConsistencyMode.STRONG if (mode is None) else mode
        self._tolOverride = tol
        self._tol = ChronosConfig.resolveTol(tol)
        self._current: Node = None

        self._dim: int = None
        self._kets: Dict[str, Ket] = {}
        self._projectors: Dict[str, Projector] = {}
        self._unitaries: Dict[str, np.ndarray] = {}
        self._times: Dict[str, float] = {}
        self._timeOrder: List[str] = []
        self._evolves: List[Node] = []
        self._hamiltonian: Node = None
        self._densities: Dict[str, Node] = {}
        self._family: PropagatorFamily = None
        self._metric: OperatorMetric = None

        self._histories: Dict[str, ProductHistory] = {}
        self._declared: List[ScenarioFramework] = []
        self._frameworks: Dict[str, Framework] = {}
        self._items = []
        self._distribution: ProbabilityDistribution = None
        self._queries: List[ScenarioQuery] = []

    @staticmethod
    def elaborate(ast: ScenarioAst, mode: ConsistencyMode = None,
                  tol: float = None) -> Scenario:
        return ScenarioElaborator(ast, mode, tol)._run()

    # ***********************************************************************

    def _fail(self, code: ScenarioErrorCode, msg: str, node: Node = None, **details):
        span = node.span if (node is not None) and (node.span is not None) \
            else self._current.span
        raise ScenarioError(code, msg, span, self._name, **details)

    def _guarded(self, decl: Node, fn) -> None:
        self._current = decl
        try:
            fn(decl)
        except ScenarioError:
            raise
        except ChronosError as ex:
            raise ScenarioError.fromEngine(ex, decl.span, self._name)

    def _needSpace(self) -> int:
        if (self._dim is None):
            self._fail(ScenarioErrorCode.MISSING_SPACE,
                       "'space dim N;' must come before this declaration")
        return self._dim

    def _run(self) -> Scenario:
        decls = self._ast.getDeclarations()
        firstPass = {
            NodeKind.DECL_SPACE: self._space,
            NodeKind.DECL_KET: self._ketDecl,
            NodeKind.DECL_PROJ: self._projDecl,
            NodeKind.DECL_UNITARY: self._unitaryDecl,
            NodeKind.DECL_TIMES: self._timesDecl,
            NodeKind.DECL_EVOLVE: self._evolveDecl,
            NodeKind.DECL_HAMILTONIAN: self._hamiltonianDecl,
            NodeKind.DECL_DENSITY: self._densityDecl,
        }
        secondPass = {
            NodeKind.DECL_HISTORY: self._historyDecl,
            NodeKind.DECL_FRAMEWORK: self._frameworkDecl,
            NodeKind.DECL_ASSUME: self._assumeDecl,
            NodeKind.DECL_ASSUME_DIST: self._assumeDistDecl,
            NodeKind.DECL_QUERY: self._queryDecl,
        }
        # tolerance governs every check, wherever it is declared
        for d in decls:
            if d.kind == NodeKind.DECL_TOLERANCE:
                self._guarded(d, self._tolerance)
        for d in decls:
            if d.kind in firstPass:
                self._guarded(d, firstPass[d.kind])
        self._buildFamily()
        self._buildMetric()
        for d in decls:
            if d.kind in secondPass:
                self._guarded(d, secondPass[d.kind])

        data = None
        if (self._family is not None) and (self._dim is not None):
            data = InitialData(self._family, self._dim, self._items, self._distribution)
        Logger.info("elaborated {}: {} framework(s), {} query(ies)".format(
            self._name, len(self._declared), len(self._queries)), "scenario")
        return Scenario(self._name, self._dim, self._tol, self._mode, self._metric,
                        self._family, self._times, self._kets, self._projectors,
                        self._unitaries, self._histories, self._declared, self._frameworks,
                        data, self._queries)

    # ***********************************************************************
    # first pass

    def _space(self, d: Node) -> None:
        self._dim = CMatrix.checkDim(d.value)

    def _tolerance(self, d: Node) -> None:
        tol = self._real(d.child())
        if tol <= 0.0:
            self._fail(ScenarioErrorCode.SYNTAX_ERROR, "tolerance must be positive")
        if (self._tolOverride is None):
            self._tol = tol

    def _ketDecl(self, d: Node) -> None:
        self._needSpace()
        self._kets[d.value] = self._ket(d.child())

    def _projDecl(self, d: Node) -> None:
        self._needSpace()
        self._projectors[d.value] = self._proj(d.child())

    def _unitaryDecl(self, d: Node) -> None:
        dim = self._needSpace()
        body = d.child()
        if body.kind == NodeKind.MATRIX:
            u = self._matrix(body)
        else:
            u = np.zeros((dim, dim), dtype=complex)
            for entry in body.children:
                source = self._ket(entry.child(0)).getAmplitudes()
                image = self._ket(entry.child(1)).getAmplitudes()
                u = u + np.outer(image, source.conj())
        defect = CMatrix.unitarityDefect(u)
        if defect > self._tol:
            raise NonUnitaryError("unitary {} is not unitary (||U^dagger U - I|| = {:.3e})"
                                  .format(d.value, defect), bound=self._tol, magnitude=defect)
        self._unitaries[d.value] = u

    def _timesDecl(self, d: Node) -> None:
        for entry in d.children:
            value = self._real(entry.child())
            if self._timeOrder and value <= self._times[self._timeOrder[-1]]:
                self._fail(ScenarioErrorCode.INVALID_TIMES,
                           "time {} = {:g} does not follow {} = {:g}".format(
                               entry.value, value, self._timeOrder[-1],
                               self._times[self._timeOrder[-1]]), entry)
            self._times[entry.value] = value
            self._timeOrder.append(entry.value)

    def _evolveDecl(self, d: Node) -> None:
        self._evolves.append(d)

    def _hamiltonianDecl(self, d: Node) -> None:
        if (self._hamiltonian is not None):
            self._fail(ScenarioErrorCode.DUPLICATE_IDENTIFIER, "Hamiltonian declared twice")
        self._hamiltonian = d

    def _densityDecl(self, d: Node) -> None:
        self._needSpace()
        if d.value in self._densities:
            self._fail(ScenarioErrorCode.DUPLICATE_IDENTIFIER,
                       "{} density matrix declared twice".format(d.value))
        self._densities[d.value] = d

    # ***********************************************************************
    # dynamics and metric

    def _buildFamily(self) -> None:
        if not self._timeOrder:
            first = self._hamiltonian or (self._evolves[0] if self._evolves else None)
            if (first is not None):
                self._current = first
                self._fail(ScenarioErrorCode.INVALID_TIMES, "dynamics declared without times")
            return
        values = [self._times[t] for t in self._timeOrder]
        if (self._hamiltonian is not None):
            self._current = self._hamiltonian
            if self._evolves:
                self._fail(ScenarioErrorCode.DUPLICATE_IDENTIFIER,
                           "dynamics given both as a Hamiltonian and as step maps")
            self._guarded(self._hamiltonian, lambda d: self._setFamily(
                PropagatorFamily.fromHamiltonian(self._matrix(d.child()), values, self._tol)))
            return
        if (self._dim is None):
            if self._evolves:
                self._current = self._evolves[0]
                self._needSpace()
            return
        dim = self._dim
        if not self._evolves:
            Logger.info("no dynamics declared in {}; using the identity".format(self._name),
                        "scenario")
            self._family = PropagatorFamily.identity(dim, values)
            return
        maps: List[Optional[np.ndarray]] = [None] * (len(values) - 1)
        for d in self._evolves:
            self._current = d
            tFrom, tTo = d.value
            for t in (tFrom, tTo):
                if t not in self._times:
                    self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER,
                               "unknown time '{}'".format(t), name=t)
            i, j = self._timeOrder.index(tFrom), self._timeOrder.index(tTo)
            if j != i + 1:
                self._fail(ScenarioErrorCode.INVALID_TIMES,
                           "evolve must connect adjacent times forward, not {} -> {}".format(
                               tFrom, tTo))
            if (maps[i] is not None):
                self._fail(ScenarioErrorCode.DUPLICATE_IDENTIFIER,
                           "dynamics {} -> {} declared twice".format(tFrom, tTo))
            target = d.child()
            if target.kind == NodeKind.IDENTITY:
                maps[i] = CMatrix.identity(dim)
            elif target.value in self._unitaries:
                maps[i] = self._unitaries[target.value]
            else:
                self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER,
                           "unknown unitary '{}'".format(target.value), target,
                           name=target.value)
        missing = [i for i, m in enumerate(maps) if m is None]
        if missing:
            self._current = self._evolves[0]
            i = missing[0]
            self._fail(ScenarioErrorCode.MISSING_DYNAMICS, "no evolve declared for {} -> {}"
                       .format(self._timeOrder[i], self._timeOrder[i + 1]))
        self._guarded(self._evolves[0], lambda d: self._setFamily(
            PropagatorFamily(values, maps, self._tol, dim)))

    def _setFamily(self, family: PropagatorFamily) -> None:
        if (self._dim is not None) and family.getDim() != self._dim:
            self._fail(ScenarioErrorCode.DIMENSION_MISMATCH,
                       "dynamics act on dimension {}, space has {}".format(
                           family.getDim(), self._dim))
        self._family = family

    def _buildMetric(self) -> None:
        if self._mode not in (ConsistencyMode.RHO, ConsistencyMode.RHO_RHO):
            return
        if (self._dim is None):
            return
        rhos = {}
        for which in ("initial", "final"):
            d = self._densities.get(which)
            if (d is None):
                rhos[which] = CMatrix.identity(self._dim) / self._dim
                if which == "initial" or self._mode == ConsistencyMode.RHO_RHO:
                    Logger.info("no {} density matrix in {}; using I/{}".format(
                        which, self._name, self._dim), "scenario")
                continue
            self._guarded(d, lambda decl: rhos.__setitem__(
                which, OperatorMetric.validateDensity(self._matrix(decl.child()), self._tol)))
        if self._mode == ConsistencyMode.RHO:
            self._metric = OperatorMetric(MetricKind.INITIAL_RHO, rho=rhos["initial"],
                                          tol=self._tol)
        else:
            self._metric = OperatorMetric(MetricKind.INITIAL_FINAL_RHO, rho=rhos["initial"],
                                          rhoPrime=rhos["final"], tol=self._tol)

    # ***********************************************************************
    # second pass

    def _historyDecl(self, d: Node) -> None:
        self._needSpace()
        self._histories[d.value] = self._history(d.child())

    def _needFamily(self) -> PropagatorFamily:
        self._needSpace()
        if (self._family is None):
            self._fail(ScenarioErrorCode.INVALID_TIMES, "no times declared")
        return self._family

    def _frameworkDecl(self, d: Node) -> None:
        family = self._needFamily()
        name, expect = d.value
        elements = []
        dropped = 0
        for term in d.child().children:
            if term.kind == NodeKind.FAM_PRODUCT:
                groups = [[self._history(h) for h in g.children] for g in term.children]
                for combo in itertools.product(*groups):
                    product = self._meetAll(list(combo))
                    if (product is None):
                        dropped += 1
                    else:
                        elements.append(product)
            else:
                h = self._history(term)
                if h.isZero():
                    dropped += 1
                else:
                    elements.append(h)
        cap = self._history(d.child(1).child()) if len(d.children) > 1 else None
        dec = Decomposition.build(elements, cap, self._tol)
        dropped += dec.getDroppedCount()
        if dropped:
            Logger.info("framework {}: dropped {} zero element(s)".format(name, dropped),
                        "scenario")
        report = ConsistencyChecker.check(dec, family, self._metric, self._mode, self._tol)
        if report.getVerdict():
            self._frameworks[name] = Framework(dec, family, report, self._metric, self._tol, name)
            if expect:
                Logger.warning("framework {} is marked expect-inconsistent but is consistent"
                               .format(name), "scenario")
        elif not expect:
            self._fail(ScenarioErrorCode.INCONSISTENT_FRAMEWORK,
                       "framework {} is not {}-consistent: worst pair {} with magnitude {:.3e}"
                       .format(name, self._mode.value, report.getWorstPair(),
                               report.getWorstMagnitude()),
                       magnitude=report.getWorstMagnitude(), pair=report.getWorstPair())
        self._declared.append(ScenarioFramework(name, dec, report, expect, dropped, d.span))

    def _lookupFramework(self, name: str) -> Framework:
        if name in self._frameworks:
            return self._frameworks[name]
        if any(f.name == name for f in self._declared):
            self._fail(ScenarioErrorCode.INCONSISTENT_FRAMEWORK,
                       "framework {} is inconsistent and cannot carry data".format(name))
        self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER, "unknown framework '{}'".format(name),
                   name=name)

    def _assumeDecl(self, d: Node) -> None:
        fw = self._lookupFramework(d.value)
        if (self._distribution is not None):
            self._fail(ScenarioErrorCode.UNSUPPORTED_DATA,
                       "a probability distribution cannot be combined with other data")
        h = self._history(d.child())
        e = fw.contains(h)
        if (e is None):
            self._fail(ScenarioErrorCode.NOT_IN_FRAMEWORK,
                       "the assumed history is not an element of framework {}".format(d.value),
                       d.child())
        self._items.append((fw, e))

    def _assumeDistDecl(self, d: Node) -> None:
        fw = self._lookupFramework(d.value)
        if self._items or (self._distribution is not None):
            self._fail(ScenarioErrorCode.UNSUPPORTED_DATA,
                       "a probability distribution must be the only data item")
        values = [self._real(c) for c in d.child().children]
        self._distribution = ProbabilityDistribution.assign(fw, values)

    def _queryDecl(self, d: Node) -> None:
        self._needFamily()
        targets = [self._history(h) for h in d.child(0).children]
        condition = self._history(d.child(1).child()) if len(d.children) > 1 else None
        self._queries.append(ScenarioQuery(d.value, targets, condition, d.span))

    # ***********************************************************************
    # expressions

    def _scalar(self, n: Node) -> complex:
        k = n.kind
        if k in (NodeKind.NUMBER, NodeKind.IMAG):
            if not np.isfinite(n.value):
                self._fail(ScenarioErrorCode.INVALID_NUMBER, "number out of range", n)
            return complex(n.value) if k == NodeKind.NUMBER else 1j * n.value
        if k == NodeKind.NEG:
            return -self._scalar(n.child())
        if k == NodeKind.SQRT:
            return complex(np.sqrt(complex(self._scalar(n.child()))))
        a, b = self._scalar(n.child(0)), self._scalar(n.child(1))
        if k == NodeKind.ADD:
            return a + b
        if k == NodeKind.SUB:
            return a - b
        if k == NodeKind.MUL:
            return a * b
        if b == 0:
            self._fail(ScenarioErrorCode.SYNTAX_ERROR, "division by zero", n)
        return a / b

    def _real(self, n: Node) -> float:
        z = self._scalar(n)
        if abs(z.imag) > 0.0:
            self._fail(ScenarioErrorCode.SYNTAX_ERROR, "expected a real number", n)
        return z.real

    def _vector(self, n: Node) -> np.ndarray:
        return np.array([self._scalar(c) for c in n.children], dtype=complex)

    def _matrix(self, n: Node) -> np.ndarray:
        dim = self._needSpace()
        rows = [self._vector(r) for r in n.children]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            self._fail(ScenarioErrorCode.DIMENSION_MISMATCH,
                       "matrix must be {0} x {0}".format(dim), n)
        return np.array(rows)

    def _ket(self, n: Node) -> Ket:
        k = n.kind
        dim = self._needSpace()
        if k == NodeKind.VECTOR:
            amps = self._vector(n)
            if len(amps) != dim:
                self._fail(ScenarioErrorCode.DIMENSION_MISMATCH,
                           "ket has {} amplitudes, space has dimension {}".format(len(amps), dim),
                           n)
            return Ket(amps)
        if k == NodeKind.KET_REF:
            if n.value not in self._kets:
                self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER,
                           "unknown ket '{}'".format(n.value), n, name=n.value)
            return self._kets[n.value]
        if k == NodeKind.KET_BASIS:
            if n.value >= dim:
                self._fail(ScenarioErrorCode.DIMENSION_MISMATCH,
                           "basis({}) outside dimension {}".format(n.value, dim), n)
            return Ket.basis(dim, n.value)
        if k == NodeKind.KET_NORMALIZE:
            return self._ket(n.child()).normalized(self._tol)
        if k == NodeKind.KET_SCALE:
            return self._scalar(n.child(0)) * self._ket(n.child(1))
        if k == NodeKind.KET_NEG:
            return -self._ket(n.child())
        if k == NodeKind.KET_ADD:
            return self._ket(n.child(0)) + self._ket(n.child(1))
        return self._ket(n.child(0)) - self._ket(n.child(1))

    def _proj(self, n: Node) -> Projector:
        k = n.kind
        dim = self._needSpace()
        if k == NodeKind.PROJ_REF:
            if n.value not in self._projectors:
                self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER,
                           "unknown projector '{}'".format(n.value), n, name=n.value)
            return self._projectors[n.value]
        if k == NodeKind.PROJ_IDENTITY:
            return Projector.identity(dim)
        if k == NodeKind.PROJ_DYAD:
            return Projector.fromKets([self._ket(n.child()).normalized(self._tol)], self._tol)
        if k == NodeKind.PROJ_SPAN:
            return Projector.fromKets([self._ket(c) for c in n.children], self._tol)
        if k == NodeKind.MATRIX:
            return Projector.make(self._matrix(n), self._tol)
        if k == NodeKind.PROJ_NOT:
            return self._proj(n.child()).complement()
        a, b = self._proj(n.child(0)), self._proj(n.child(1))
        if k == NodeKind.PROJ_JOIN:
            return a.join(b, self._tol)
        return a.meet(b, self._tol)

    def _time(self, n: Node) -> float:
        if n.value not in self._times:
            self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER, "unknown time '{}'".format(n.value),
                       n, name=n.value)
        return self._times[n.value]

    def _zeroHistory(self, grid: TimeGrid) -> ProductHistory:
        events = [Projector.identity(self._dim)] * grid.size()
        events[0] = Projector.zero(self._dim)
        return ProductHistory(grid, events)

    def _meetAll(self, histories: List[ProductHistory]) -> Optional[ProductHistory]:
        product = histories[0]
        for h in histories[1:]:
            product = product.meet(h, self._tol)
            if (product is None):
                return None
        return product

    def _history(self, n: Node) -> ProductHistory:
        k = n.kind
        if k == NodeKind.HIST_EVENT:
            return ProductHistory.single(self._proj(n.child()), self._time(n))
        if k == NodeKind.HIST_REF:
            if n.value not in self._histories:
                self._fail(ScenarioErrorCode.UNKNOWN_IDENTIFIER,
                           "unknown history '{}'".format(n.value), n, name=n.value)
            return self._histories[n.value]
        if k == NodeKind.HIST_PRODUCT:
            parts = [self._history(c) for c in n.children]
            product = self._meetAll(parts)
            if (product is None):
                grid = parts[0].getGrid()
                for p in parts[1:]:
                    grid = grid.union(p.getGrid())
                return self._zeroHistory(grid)
            return product
        # positional, one slot per declared time
        if len(n.children) != len(self._timeOrder):
            self._fail(ScenarioErrorCode.DIMENSION_MISMATCH,
                       "positional history has {} slots but {} times are declared".format(
                           len(n.children), len(self._timeOrder)), n)
        events = [Projector.identity(self._needSpace()) if c.kind == NodeKind.HIST_STAR
                  else self._proj(c) for c in n.children]
        return ProductHistory(TimeGrid([self._times[t] for t in self._timeOrder]), events)
