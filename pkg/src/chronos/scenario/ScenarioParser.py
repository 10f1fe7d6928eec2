"""
ScenarioParser: tokenizer and recursive descent parser for .chs documents.
The grammar is documented in docs/scenario-grammar.md.  Parsing is purely
syntactic apart from one check: identifiers must be unique within their
namespace (kets, projectors, unitaries, times, histories, frameworks,
queries).
"""

import re
from typing import List

from chronos.scenario.ScenarioAst import Node, NodeKind, ScenarioAst
from chronos.scenario.ScenarioError import ScenarioError, ScenarioErrorCode
from chronos.scenario.ScenarioSource import ScenarioSource, SourceSpan


RESERVED = frozenset([
    "space", "dim", "tolerance", "ket", "proj", "unitary", "times", "evolve", "history",
    "framework", "assume", "query", "given", "cap", "identity", "hamiltonian", "normalize",
    "sqrt", "basis", "dyad", "span", "map", "I", "dist", "density", "initial", "final",
])

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\f]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<imag>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?i(?![A-Za-z0-9_]))
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<flag>expect-inconsistent)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>->|[;,=:()\[\]{}+\-*/|&~@])
""", re.VERBOSE)

_NAMESPACES = {
    NodeKind.DECL_KET: "ket",
    NodeKind.DECL_PROJ: "projector",
    NodeKind.DECL_UNITARY: "unitary",
    NodeKind.DECL_HISTORY: "history",
    NodeKind.DECL_QUERY: "query",
}


class Token:
    kind: str = None        # number, imag, ident, flag, sym, eof
    text: str = None
    value = None
    span: SourceSpan = None

    def __init__(self, kind: str, text: str, value, span: SourceSpan):
        self.kind = kind
        self.text = text
        self.value = value
        self.span = span

    def describe(self) -> str:
        if self.kind == "eof":
            return "end of input"
        return "'{}'".format(self.text)

    def __repr__(self) -> str:
        return "Token({}, {!r}, {})".format(self.kind, self.text, self.span)


# ***********************************************************************


class ScenarioParser:

    _tokens: List[Token] = None
    _pos: int = 0
    _name: str = None

    def __init__(self, src: ScenarioSource):
        self._name = src.getName()
        self._tokens = ScenarioParser.tokenize(src)
        self._pos = 0

    @staticmethod
    def parse(src: ScenarioSource) -> ScenarioAst:
        if src.isEmpty():
            raise ScenarioError(ScenarioErrorCode.SYNTAX_ERROR, "scenario is empty",
                                SourceSpan(1, 1), src.getName())
        parser = ScenarioParser(src)
        decls = parser._document()
        if not decls:
            raise ScenarioError(ScenarioErrorCode.SYNTAX_ERROR, "scenario has no declarations",
                                parser._peek().span, src.getName())
        return ScenarioAst(decls, src.getName())

    @staticmethod
    def parseText(text: str, name: str = "<string>") -> ScenarioAst:
        return ScenarioParser.parse(ScenarioSource(text, name))

    @staticmethod
    def tokenize(src: ScenarioSource) -> List[Token]:
        text = src.getText()
        tokens = []
        line, lineStart, pos = 1, 0, 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            span = SourceSpan(line, pos - lineStart + 1)
            if (m is None):
                raise ScenarioError(ScenarioErrorCode.SYNTAX_ERROR,
                                    "unexpected character {!r}".format(text[pos]), span,
                                    src.getName())
            kind = m.lastgroup
            lexeme = m.group()
            if kind == "nl":
                line += 1
                lineStart = m.end()
            elif kind == "number":
                tokens.append(Token(kind, lexeme, float(lexeme), span))
            elif kind == "imag":
                tokens.append(Token(kind, lexeme, float(lexeme[:-1]), span))
            elif kind in ("ident", "flag", "sym"):
                tokens.append(Token(kind, lexeme, lexeme, span))
            pos = m.end()
        tokens.append(Token("eof", "", None, SourceSpan(line, pos - lineStart + 1)))
        return tokens

    # ***********************************************************************
    # token helpers

    def _peek(self, k: int = 0) -> Token:
        return self._tokens[min(self._pos + k, len(self._tokens) - 1)]

    def _advance(self) -> Token:
        tok = self._peek()
        if tok.kind != "eof":
            self._pos += 1
        return tok

    def _at(self, text: str, k: int = 0) -> bool:
        tok = self._peek(k)
        return tok.kind in ("sym", "ident", "flag") and tok.text == text

    def _accept(self, text: str):
        if self._at(text):
            return self._advance()
        return None

    def _error(self, expected: str, tok: Token = None):
        tok = tok or self._peek()
        raise ScenarioError(ScenarioErrorCode.SYNTAX_ERROR,
                            "expected {}, found {}".format(expected, tok.describe()),
                            tok.span, self._name, token=tok.text)

    def _expect(self, text: str, opener: Token = None) -> Token:
        if self._at(text):
            return self._advance()
        if (opener is not None) and self._peek().kind == "eof":
            raise ScenarioError(ScenarioErrorCode.SYNTAX_ERROR,
                                "unclosed '{}'".format(opener.text), opener.span, self._name,
                                token=opener.text)
        self._error("'{}'".format(text))

    def _expectName(self) -> Token:
        tok = self._peek()
        if tok.kind != "ident" or tok.text in RESERVED:
            self._error("an identifier")
        return self._advance()

    def _expectInt(self) -> int:
        tok = self._peek()
        if tok.kind != "number" or tok.value != int(tok.value) or "." in tok.text \
                or "e" in tok.text.lower():
            self._error("an integer")
        self._advance()
        return int(tok.value)

    # ***********************************************************************
    # declarations

    def _document(self) -> List[Node]:
        decls = []
        seen = {}
        while self._peek().kind != "eof":
            decl = self._declaration()
            self._checkDuplicates(decl, seen)
            decls.append(decl)
        return decls

    def _checkDuplicates(self, decl: Node, seen: dict) -> None:
        names = []
        if decl.kind in _NAMESPACES:
            names.append((_NAMESPACES[decl.kind], decl.value, decl.span))
        elif decl.kind == NodeKind.DECL_FRAMEWORK:
            names.append(("framework", decl.value[0], decl.span))
        elif decl.kind == NodeKind.DECL_TIMES:
            names.extend(("time", e.value, e.span) for e in decl.children)
        elif decl.kind == NodeKind.DECL_SPACE:
            names.append(("space", "space", decl.span))
        for space, name, span in names:
            key = (space, name)
            if key in seen:
                raise ScenarioError(ScenarioErrorCode.DUPLICATE_IDENTIFIER,
                                    "{} '{}' already declared at line {}".format(
                                        space, name, seen[key].line),
                                    span, self._name, name=name)
            seen[key] = span

    def _declaration(self) -> Node:
        tok = self._peek()
        handler = {
            "space": self._space,
            "tolerance": self._tolerance,
            "ket": self._ketDecl,
            "proj": self._projDecl,
            "unitary": self._unitaryDecl,
            "times": self._times,
            "evolve": self._evolve,
            "density": self._density,
            "history": self._historyDecl,
            "framework": self._frameworkDecl,
            "assume": self._assume,
            "query": self._query,
        }.get(tok.text if tok.kind == "ident" else None)
        if (handler is None):
            self._error("a declaration")
        self._advance()
        decl = handler(tok.span)
        self._expect(";")
        return decl

    def _space(self, span: SourceSpan) -> Node:
        self._expect("dim")
        return Node(NodeKind.DECL_SPACE, self._expectInt(), span=span)

    def _tolerance(self, span: SourceSpan) -> Node:
        return Node(NodeKind.DECL_TOLERANCE, None, [self._scalar()], span)

    def _ketDecl(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        self._expect("=")
        return Node(NodeKind.DECL_KET, name, [self._ketexpr()], span)

    def _projDecl(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        self._expect("=")
        return Node(NodeKind.DECL_PROJ, name, [self._projexpr()], span)

    def _unitaryDecl(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        self._expect("=")
        if self._at("["):
            return Node(NodeKind.DECL_UNITARY, name, [self._matrix()], span)
        mapTok = self._peek()
        self._expect("map")
        opener = self._expect("(")
        entries = [self._mapEntry()]
        while self._accept(","):
            entries.append(self._mapEntry())
        self._expect(")", opener)
        return Node(NodeKind.DECL_UNITARY, name,
                    [Node(NodeKind.UNITARY_MAP, None, entries, mapTok.span)], span)

    def _mapEntry(self) -> Node:
        span = self._peek().span
        source = self._ketexpr()
        self._expect("->")
        return Node(NodeKind.MAP_ENTRY, None, [source, self._ketexpr()], span)

    def _times(self, span: SourceSpan) -> Node:
        entries = [self._timeEntry()]
        while self._accept(","):
            entries.append(self._timeEntry())
        return Node(NodeKind.DECL_TIMES, None, entries, span)

    def _timeEntry(self) -> Node:
        tok = self._expectName()
        self._expect("=")
        return Node(NodeKind.TIME_ENTRY, tok.text, [self._scalar()], tok.span)

    def _evolve(self, span: SourceSpan) -> Node:
        if self._accept("hamiltonian"):
            return Node(NodeKind.DECL_HAMILTONIAN, None, [self._matrix()], span)
        tFrom = self._expectName().text
        self._expect("->")
        tTo = self._expectName().text
        self._expect("=")
        tok = self._peek()
        if self._accept("identity"):
            target = Node(NodeKind.IDENTITY, None, span=tok.span)
        else:
            target = Node(NodeKind.UNITARY_REF, self._expectName().text, span=tok.span)
        return Node(NodeKind.DECL_EVOLVE, (tFrom, tTo), [target], span)

    def _density(self, span: SourceSpan) -> Node:
        tok = self._peek()
        if not (self._at("initial") or self._at("final")):
            self._error("'initial' or 'final'")
        self._advance()
        self._expect("=")
        return Node(NodeKind.DECL_DENSITY, tok.text, [self._matrix()], span)

    def _historyDecl(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        self._expect("=")
        return Node(NodeKind.DECL_HISTORY, name, [self._histexpr()], span)

    def _frameworkDecl(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        cap = None
        capTok = self._accept("cap")
        if (capTok is not None):
            cap = Node(NodeKind.FRAMEWORK_CAP, None, [self._histexpr()], capTok.span)
        expect = self._accept("expect-inconsistent") is not None
        self._expect("=")
        children = [self._famexpr()]
        if (cap is not None):
            children.append(cap)
        return Node(NodeKind.DECL_FRAMEWORK, (name, expect), children, span)

    def _assume(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        if self._accept("dist"):
            return Node(NodeKind.DECL_ASSUME_DIST, name, [self._vector()], span)
        self._expect(":")
        return Node(NodeKind.DECL_ASSUME, name, [self._histexpr()], span)

    def _query(self, span: SourceSpan) -> Node:
        name = self._expectName().text
        self._expect(":")
        tspan = self._peek().span
        targets = [self._histexpr()]
        while self._accept(","):
            targets.append(self._histexpr())
        children = [Node(NodeKind.QUERY_TARGETS, None, targets, tspan)]
        givenTok = self._accept("given")
        if (givenTok is not None):
            children.append(Node(NodeKind.QUERY_GIVEN, None, [self._histexpr()], givenTok.span))
        return Node(NodeKind.DECL_QUERY, name, children, span)

    # ***********************************************************************
    # scalars, vectors, matrices

    def _scalar(self) -> Node:
        left = self._sterm()
        while self._at("+") or self._at("-"):
            tok = self._advance()
            kind = NodeKind.ADD if tok.text == "+" else NodeKind.SUB
            left = Node(kind, None, [left, self._sterm()], tok.span)
        return left

    def _sterm(self) -> Node:
        left = self._sfactor()
        while self._at("*") or self._at("/"):
            tok = self._advance()
            kind = NodeKind.MUL if tok.text == "*" else NodeKind.DIV
            left = Node(kind, None, [left, self._sfactor()], tok.span)
        return left

    def _sfactor(self) -> Node:
        tok = self._peek()
        if self._accept("-"):
            return Node(NodeKind.NEG, None, [self._sfactor()], tok.span)
        if tok.kind == "number":
            self._advance()
            return Node(NodeKind.NUMBER, tok.value, span=tok.span)
        if tok.kind == "imag":
            self._advance()
            return Node(NodeKind.IMAG, tok.value, span=tok.span)
        if self._accept("sqrt"):
            opener = self._expect("(")
            inner = self._scalar()
            self._expect(")", opener)
            return Node(NodeKind.SQRT, None, [inner], tok.span)
        if self._at("("):
            opener = self._advance()
            inner = self._scalar()
            self._expect(")", opener)
            return inner
        self._error("a number")

    def _vector(self) -> Node:
        opener = self._expect("[")
        entries = [self._scalar()]
        while self._accept(","):
            entries.append(self._scalar())
        self._expect("]", opener)
        return Node(NodeKind.VECTOR, None, entries, opener.span)

    def _matrix(self) -> Node:
        opener = self._expect("[")
        rows = [self._vector()]
        while self._accept(","):
            rows.append(self._vector())
        self._expect("]", opener)
        return Node(NodeKind.MATRIX, None, rows, opener.span)

    # ***********************************************************************
    # kets

    def _ketexpr(self) -> Node:
        left = self._kterm()
        while self._at("+") or self._at("-"):
            tok = self._advance()
            kind = NodeKind.KET_ADD if tok.text == "+" else NodeKind.KET_SUB
            left = Node(kind, None, [left, self._kterm()], tok.span)
        return left

    def _kterm(self) -> Node:
        tok = self._peek()
        if self._accept("-"):
            return Node(NodeKind.KET_NEG, None, [self._kterm()], tok.span)
        return self._kfactor()

    def _kfactor(self) -> Node:
        # scalar * ket, where the scalar is a chain of factors; backtrack if absent
        start = self._pos
        tok = self._peek()
        try:
            coeff = self._sfactor()
            while True:
                if self._at("/"):
                    op = self._advance()
                    coeff = Node(NodeKind.DIV, None, [coeff, self._sfactor()], op.span)
                elif self._at("*"):
                    mark = self._pos
                    op = self._advance()
                    try:
                        coeff = Node(NodeKind.MUL, None, [coeff, self._sfactor()], op.span)
                    except ScenarioError:
                        self._pos = mark
                        break
                else:
                    break
        except ScenarioError:
            self._pos = start
            return self._katom()
        if not self._at("*"):
            self._pos = start
            return self._katom()
        self._advance()
        return Node(NodeKind.KET_SCALE, None, [coeff, self._katom()], tok.span)

    def _katom(self) -> Node:
        tok = self._peek()
        if self._at("["):
            return self._vector()
        if self._accept("normalize"):
            opener = self._expect("(")
            inner = self._ketexpr()
            self._expect(")", opener)
            return Node(NodeKind.KET_NORMALIZE, None, [inner], tok.span)
        if self._accept("basis"):
            opener = self._expect("(")
            k = self._expectInt()
            self._expect(")", opener)
            return Node(NodeKind.KET_BASIS, k, span=tok.span)
        if self._at("("):
            opener = self._advance()
            inner = self._ketexpr()
            self._expect(")", opener)
            return inner
        if tok.kind == "ident" and tok.text not in RESERVED:
            self._advance()
            return Node(NodeKind.KET_REF, tok.text, span=tok.span)
        self._error("a ket")

    # ***********************************************************************
    # projectors

    def _projexpr(self, allowMatrix: bool = True) -> Node:
        left = self._pterm(allowMatrix)
        while self._at("|"):
            tok = self._advance()
            left = Node(NodeKind.PROJ_JOIN, None, [left, self._pterm(allowMatrix)], tok.span)
        return left

    def _pterm(self, allowMatrix: bool) -> Node:
        left = self._pfactor(allowMatrix)
        while self._at("&"):
            tok = self._advance()
            left = Node(NodeKind.PROJ_MEET, None, [left, self._pfactor(allowMatrix)], tok.span)
        return left

    def _pfactor(self, allowMatrix: bool = True) -> Node:
        tok = self._peek()
        if self._accept("~"):
            return Node(NodeKind.PROJ_NOT, None, [self._pfactor(allowMatrix)], tok.span)
        return self._patom(allowMatrix)

    def _patom(self, allowMatrix: bool) -> Node:
        tok = self._peek()
        if self._accept("I"):
            return Node(NodeKind.PROJ_IDENTITY, None, span=tok.span)
        if self._accept("dyad"):
            opener = self._expect("(")
            inner = self._ketexpr()
            self._expect(")", opener)
            return Node(NodeKind.PROJ_DYAD, None, [inner], tok.span)
        if self._accept("span"):
            opener = self._expect("(")
            kets = [self._ketexpr()]
            while self._accept(","):
                kets.append(self._ketexpr())
            self._expect(")", opener)
            return Node(NodeKind.PROJ_SPAN, None, kets, tok.span)
        if self._at("[") and allowMatrix:
            return self._matrix()
        if self._at("("):
            opener = self._advance()
            inner = self._projexpr()
            self._expect(")", opener)
            return inner
        if tok.kind == "ident" and tok.text not in RESERVED:
            self._advance()
            return Node(NodeKind.PROJ_REF, tok.text, span=tok.span)
        self._error("a projector")

    # ***********************************************************************
    # histories and frameworks

    def _histexpr(self) -> Node:
        tok = self._peek()
        factors = [self._hfactor()]
        while self._accept("*"):
            factors.append(self._hfactor())
        if len(factors) == 1:
            return factors[0]
        return Node(NodeKind.HIST_PRODUCT, None, factors, tok.span)

    def _hfactor(self) -> Node:
        tok = self._peek()
        if self._at("["):
            opener = self._advance()
            slots = [self._slot()]
            while self._accept(","):
                slots.append(self._slot())
            self._expect("]", opener)
            return Node(NodeKind.HIST_POSITIONAL, None, slots, tok.span)
        if tok.kind == "ident" and tok.text not in RESERVED and not self._at("@", 1):
            self._advance()
            return Node(NodeKind.HIST_REF, tok.text, span=tok.span)
        event = self._pfactor(allowMatrix=False)
        self._expect("@")
        t = self._expectName().text
        return Node(NodeKind.HIST_EVENT, t, [event], tok.span)

    def _slot(self) -> Node:
        tok = self._peek()
        if self._at("*") and (self._at(",", 1) or self._at("]", 1)):
            self._advance()
            return Node(NodeKind.HIST_STAR, None, span=tok.span)
        return self._projexpr(allowMatrix=False)

    def _famexpr(self) -> Node:
        tok = self._peek()
        terms = [self._fterm()]
        while self._accept("+"):
            terms.append(self._fterm())
        return Node(NodeKind.FAM_SUM, None, terms, tok.span)

    def _fterm(self) -> Node:
        tok = self._peek()
        if not self._at("{"):
            return self._histexpr()
        groups = []
        while self._at("{"):
            opener = self._advance()
            members = [self._histexpr()]
            while self._accept("+"):
                members.append(self._histexpr())
            self._expect("}", opener)
            groups.append(Node(NodeKind.FAM_GROUP, None, members, opener.span))
        return Node(NodeKind.FAM_PRODUCT, None, groups, tok.span)
