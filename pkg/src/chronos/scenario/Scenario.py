"""
Scenario: the elaborated content of a .chs document.  Everything is resolved:
named kets and projectors, the propagator family, named histories, the
frameworks with their consistency reports, the initial data and the queries.
Frameworks marked expect-inconsistent keep their (failing) report but are not
available as frameworks.
"""

from typing import Dict, List, Optional

from chronos.qalg.OperatorMetric import OperatorMetric
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.histories.ProductHistory import ProductHistory
from chronos.framework.Decomposition import Decomposition
from chronos.framework.ConsistencyReport import ConsistencyReport, ConsistencyMode
from chronos.reasoning.Framework import Framework
from chronos.reasoning.InitialData import InitialData
from chronos.reasoning.Reasoner import Reasoner
from chronos.reasoning.Verdict import Verdict
from chronos.scenario.ScenarioSource import SourceSpan


class ScenarioQuery:
    name: str = None
    targets: List[ProductHistory] = None
    condition: Optional[ProductHistory] = None
    span: SourceSpan = None

    def __init__(self, name: str, targets: List[ProductHistory],
                 condition: Optional[ProductHistory], span: SourceSpan = None):
        self.name = name
        self.targets = list(targets)
        self.condition = condition
        self.span = span

    def __repr__(self) -> str:
        return "ScenarioQuery({}, {} target(s){})".format(
            self.name, len(self.targets), "" if self.condition is None else ", conditioned")


class ScenarioFramework:
    # a declared framework as written, before or without a passing check
    name: str = None
    decomposition: Decomposition = None
    report: ConsistencyReport = None
    expectInconsistent: bool = False
    droppedCount: int = 0
    span: SourceSpan = None

    def __init__(self, name: str, decomposition: Decomposition, report: ConsistencyReport,
                 expectInconsistent: bool, droppedCount: int, span: SourceSpan = None):
        self.name = name
        self.decomposition = decomposition
        self.report = report
        self.expectInconsistent = expectInconsistent
        self.droppedCount = droppedCount
        self.span = span


class Scenario:

    def __init__(self, name: str, dim: int, tol: float, mode: ConsistencyMode,
                 metric: Optional[OperatorMetric], family: Optional[PropagatorFamily],
                 times: Dict[str, float], kets: dict, projectors: dict, unitaries: dict,
                 histories: Dict[str, ProductHistory], declared: List[ScenarioFramework],
                 frameworks: Dict[str, Framework], data: Optional[InitialData],
                 queries: List[ScenarioQuery]):
        self._name = name
        self._dim = dim
        self._tol = tol
        self._mode = mode
        self._metric = metric
        self._family = family
        self._times = dict(times)
        self._kets = dict(kets)
        self._projectors = dict(projectors)
        self._unitaries = dict(unitaries)
        self._histories = dict(histories)
        self._declared = list(declared)
        self._frameworks = dict(frameworks)
        self._data = data
        self._queries = list(queries)

    def getName(self) -> str:
        return self._name

    def getDim(self) -> int:
        return self._dim

    def getTol(self) -> float:
        return self._tol

    def getMode(self) -> ConsistencyMode:
        return self._mode

    def getMetric(self) -> Optional[OperatorMetric]:
        return self._metric

    def getFamily(self) -> Optional[PropagatorFamily]:
        return self._family

    def getTimes(self) -> Dict[str, float]:
        return dict(self._times)

    def getKets(self) -> dict:
        return dict(self._kets)

    def getProjectors(self) -> dict:
        return dict(self._projectors)

    def getUnitaries(self) -> dict:
        return dict(self._unitaries)

    def getHistories(self) -> Dict[str, ProductHistory]:
        return dict(self._histories)

    def getDeclaredFrameworks(self) -> List[ScenarioFramework]:
        return list(self._declared)

    def getFrameworks(self) -> Dict[str, Framework]:
        return dict(self._frameworks)

    def getFramework(self, name: str) -> Framework:
        return self._frameworks[name]

    def getInitialData(self) -> Optional[InitialData]:
        return self._data

    def getQueries(self) -> List[ScenarioQuery]:
        return list(self._queries)

    def getQuery(self, name: str) -> ScenarioQuery:
        for q in self._queries:
            if q.name == name:
                return q
        raise KeyError(name)

    def answer(self, query: ScenarioQuery, tolProb: float = None) -> Verdict:
        return Reasoner.query(self._data, query.targets, query.condition, self._mode,
                              self._metric, self._tol, tolProb)

    def __repr__(self) -> str:
        return "Scenario({}, dim={}, {} framework(s), {} query(ies))".format(
            self._name, self._dim, len(self._declared), len(self._queries))
