"""
Syntax tree of a scenario document.  Every node is a Node(kind, value,
children, span); declarations are nodes too, with kinds from the DECL_ group.
Parentheses leave no trace in the tree.  Equality ignores spans, so a printed
and re-parsed document compares equal to the original.

Node values by kind:

    NUMBER, IMAG          float (IMAG is the coefficient of i)
    KET_BASIS             int index
    *_REF                 identifier
    HIST_EVENT            time name (child: projector expression)
    DECL_SPACE            int dimension
    DECL_KET/PROJ/UNITARY/HISTORY/QUERY   declared name
    DECL_TIMES            None (children TIME_ENTRY, value = time name)
    DECL_EVOLVE           (from time, to time)
    DECL_DENSITY          "initial" or "final"
    DECL_FRAMEWORK        (name, expect-inconsistent flag)
    DECL_ASSUME*          framework name
"""

from enum import Enum
from typing import List

from chronos.scenario.ScenarioSource import SourceSpan


class NodeKind(Enum):
    # scalars
    NUMBER = "number"
    IMAG = "imag"
    NEG = "neg"
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    SQRT = "sqrt"
    VECTOR = "vector"
    MATRIX = "matrix"
    # kets
    KET_REF = "ket-ref"
    KET_BASIS = "ket-basis"
    KET_NORMALIZE = "ket-normalize"
    KET_SCALE = "ket-scale"
    KET_ADD = "ket-add"
    KET_SUB = "ket-sub"
    KET_NEG = "ket-neg"
    # projectors
    PROJ_REF = "proj-ref"
    PROJ_IDENTITY = "proj-identity"
    PROJ_DYAD = "proj-dyad"
    PROJ_SPAN = "proj-span"
    PROJ_JOIN = "proj-join"
    PROJ_MEET = "proj-meet"
    PROJ_NOT = "proj-not"
    # unitaries
    UNITARY_MAP = "unitary-map"
    MAP_ENTRY = "map-entry"
    UNITARY_REF = "unitary-ref"
    IDENTITY = "identity"
    # histories
    HIST_EVENT = "hist-event"
    HIST_PRODUCT = "hist-product"
    HIST_REF = "hist-ref"
    HIST_POSITIONAL = "hist-positional"
    HIST_STAR = "hist-star"
    # frameworks
    FAM_SUM = "fam-sum"
    FAM_PRODUCT = "fam-product"
    FAM_GROUP = "fam-group"
    # declarations
    DECL_SPACE = "space"
    DECL_TOLERANCE = "tolerance"
    DECL_KET = "ket"
    DECL_PROJ = "proj"
    DECL_UNITARY = "unitary"
    DECL_TIMES = "times"
    TIME_ENTRY = "time-entry"
    DECL_EVOLVE = "evolve"
    DECL_HAMILTONIAN = "hamiltonian"
    DECL_DENSITY = "density"
    DECL_HISTORY = "history"
    DECL_FRAMEWORK = "framework"
    FRAMEWORK_CAP = "framework-cap"
    DECL_ASSUME = "assume"
    DECL_ASSUME_DIST = "assume-dist"
    DECL_QUERY = "query"
    QUERY_TARGETS = "query-targets"
    QUERY_GIVEN = "query-given"


class Node:

    kind: NodeKind = None
    value = None
    children: tuple = None
    span: SourceSpan = None

    def __init__(self, kind: NodeKind, value=None, children: List["Node"] = None,
                 span: SourceSpan = None):
        self.kind = kind
        self.value = value
        self.children = tuple(children or [])
        self.span = span

    def child(self, i: int = 0) -> "Node":
        return self.children[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Node) and self.kind == other.kind \
            and self.value == other.value and self.children == other.children

    def __hash__(self) -> int:
        return hash((self.kind, self.value, self.children))

    def __repr__(self) -> str:
        if not self.children:
            return "{}({!r})".format(self.kind.value, self.value)
        return "{}({!r}, {})".format(self.kind.value, self.value,
                                     ", ".join(repr(c) for c in self.children))


class ScenarioAst:

    _declarations: tuple = None
    _sourceName: str = None

    def __init__(self, declarations: List[Node], sourceName: str = None):
        self._declarations = tuple(declarations)
        self._sourceName = sourceName

    def getDeclarations(self) -> tuple:
        return self._declarations

    def getSourceName(self) -> str:
        return self._sourceName

    def ofKind(self, *kinds: NodeKind) -> List[Node]:
        return [d for d in self._declarations if d.kind in kinds]

    def __len__(self) -> int:
        return len(self._declarations)

    def __eq__(self, other) -> bool:
        return isinstance(other, ScenarioAst) and self._declarations == other._declarations

    def __hash__(self) -> int:
        return hash(self._declarations)
