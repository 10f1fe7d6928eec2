"""
ScenarioPrinter: renders a ScenarioAst back to .chs text, one declaration per
line.  Parentheses are inserted only where precedence needs them, so that
parsing the output gives back an equal tree.  Numbers print with repr() and
keep every bit.
"""

from chronos.scenario.ScenarioAst import Node, NodeKind, ScenarioAst


# binding strength; higher binds tighter
_SCALAR_LEVEL = {NodeKind.ADD: 1, NodeKind.SUB: 1, NodeKind.MUL: 2, NodeKind.DIV: 2}
_KET_LEVEL = {NodeKind.KET_ADD: 1, NodeKind.KET_SUB: 1, NodeKind.KET_NEG: 2,
              NodeKind.KET_SCALE: 3}
_PROJ_LEVEL = {NodeKind.PROJ_JOIN: 1, NodeKind.PROJ_MEET: 2}
_ATOM = 9


class ScenarioPrinter:

    @staticmethod
    def print(ast: ScenarioAst) -> str:
        return "".join(ScenarioPrinter.declaration(d) + "\n" for d in ast.getDeclarations())

    @staticmethod
    def declaration(d: Node) -> str:
        k = d.kind
        if k == NodeKind.DECL_SPACE:
            return "space dim {};".format(d.value)
        if k == NodeKind.DECL_TOLERANCE:
            return "tolerance {};".format(ScenarioPrinter.scalar(d.child()))
        if k == NodeKind.DECL_KET:
            return "ket {} = {};".format(d.value, ScenarioPrinter.ket(d.child()))
        if k == NodeKind.DECL_PROJ:
            return "proj {} = {};".format(d.value, ScenarioPrinter.proj(d.child()))
        if k == NodeKind.DECL_UNITARY:
            body = d.child()
            if body.kind == NodeKind.MATRIX:
                return "unitary {} = {};".format(d.value, ScenarioPrinter.matrix(body))
            entries = ", ".join("{} -> {}".format(ScenarioPrinter.ket(e.child(0)),
                                                  ScenarioPrinter.ket(e.child(1)))
                                for e in body.children)
            return "unitary {} = map({});".format(d.value, entries)
        if k == NodeKind.DECL_TIMES:
            return "times {};".format(", ".join(
                "{} = {}".format(e.value, ScenarioPrinter.scalar(e.child())) for e in d.children))
        if k == NodeKind.DECL_EVOLVE:
            target = d.child()
            rhs = "identity" if target.kind == NodeKind.IDENTITY else target.value
            return "evolve {} -> {} = {};".format(d.value[0], d.value[1], rhs)
        if k == NodeKind.DECL_HAMILTONIAN:
            return "evolve hamiltonian {};".format(ScenarioPrinter.matrix(d.child()))
        if k == NodeKind.DECL_DENSITY:
            return "density {} = {};".format(d.value, ScenarioPrinter.matrix(d.child()))
        if k == NodeKind.DECL_HISTORY:
            return "history {} = {};".format(d.value, ScenarioPrinter.history(d.child()))
        if k == NodeKind.DECL_FRAMEWORK:
            name, expect = d.value
            head = "framework " + name
            if len(d.children) > 1:
                head += " cap " + ScenarioPrinter.history(d.child(1).child())
            if expect:
                head += " expect-inconsistent"
            return "{} = {};".format(head, ScenarioPrinter.framework(d.child()))
        if k == NodeKind.DECL_ASSUME:
            return "assume {} : {};".format(d.value, ScenarioPrinter.history(d.child()))
        if k == NodeKind.DECL_ASSUME_DIST:
            return "assume {} dist {};".format(d.value, ScenarioPrinter.vector(d.child()))
        if k == NodeKind.DECL_QUERY:
            text = "query {} : {}".format(d.value, ", ".join(
                ScenarioPrinter.history(h) for h in d.child(0).children))
            if len(d.children) > 1:
                text += " given " + ScenarioPrinter.history(d.child(1).child())
            return text + ";"
        raise ValueError("not a declaration: {}".format(k))

    # ***********************************************************************

    @staticmethod
    def scalar(n: Node, level: int = 0) -> str:
        k = n.kind
        if k == NodeKind.NUMBER:
            return repr(float(n.value))
        if k == NodeKind.IMAG:
            return repr(float(n.value)) + "i"
        if k == NodeKind.SQRT:
            return "sqrt({})".format(ScenarioPrinter.scalar(n.child()))
        if k == NodeKind.NEG:
            return "-" + ScenarioPrinter.scalar(n.child(), _ATOM)
        mine = _SCALAR_LEVEL[k]
        op = {NodeKind.ADD: " + ", NodeKind.SUB: " - ", NodeKind.MUL: "*", NodeKind.DIV: "/"}[k]
        # left-associative: the right operand needs a tighter binding
        text = ScenarioPrinter.scalar(n.child(0), mine) + op + \
            ScenarioPrinter.scalar(n.child(1), mine + 1)
        return "({})".format(text) if mine < level else text

    @staticmethod
    def vector(n: Node) -> str:
        return "[{}]".format(", ".join(ScenarioPrinter.scalar(c) for c in n.children))

    @staticmethod
    def matrix(n: Node) -> str:
        return "[{}]".format(", ".join(ScenarioPrinter.vector(r) for r in n.children))

    @staticmethod
    def _leftmostIsNeg(n: Node) -> bool:
        while n.kind in (NodeKind.MUL, NodeKind.DIV):
            n = n.child(0)
        return n.kind == NodeKind.NEG

    @staticmethod
    def ket(n: Node, level: int = 0) -> str:
        k = n.kind
        if k == NodeKind.VECTOR:
            return ScenarioPrinter.vector(n)
        if k == NodeKind.KET_REF:
            return n.value
        if k == NodeKind.KET_BASIS:
            return "basis({})".format(n.value)
        if k == NodeKind.KET_NORMALIZE:
            return "normalize({})".format(ScenarioPrinter.ket(n.child()))
        if k == NodeKind.KET_SCALE:
            coeff = n.child(0)
            if coeff.kind in (NodeKind.ADD, NodeKind.SUB) or ScenarioPrinter._leftmostIsNeg(coeff):
                prefix = "({})".format(ScenarioPrinter.scalar(coeff))
            else:
                prefix = ScenarioPrinter.scalar(coeff, 2)
            text = prefix + "*" + ScenarioPrinter.ket(n.child(1), _ATOM)
        elif k == NodeKind.KET_NEG:
            text = "-" + ScenarioPrinter.ket(n.child(), _KET_LEVEL[k])
        else:
            op = " + " if k == NodeKind.KET_ADD else " - "
            text = ScenarioPrinter.ket(n.child(0), 1) + op + ScenarioPrinter.ket(n.child(1), 2)
        return "({})".format(text) if _KET_LEVEL[k] < level else text

    @staticmethod
    def proj(n: Node, level: int = 0) -> str:
        k = n.kind
        if k == NodeKind.PROJ_REF:
            return n.value
        if k == NodeKind.PROJ_IDENTITY:
            return "I"
        if k == NodeKind.PROJ_DYAD:
            return "dyad({})".format(ScenarioPrinter.ket(n.child()))
        if k == NodeKind.PROJ_SPAN:
            return "span({})".format(", ".join(ScenarioPrinter.ket(c) for c in n.children))
        if k == NodeKind.MATRIX:
            # bare only at the top; history events reject a leading bracket
            text = ScenarioPrinter.matrix(n)
            return "({})".format(text) if level > 0 else text
        if k == NodeKind.PROJ_NOT:
            return "~" + ScenarioPrinter.proj(n.child(), 3)
        mine = _PROJ_LEVEL[k]
        op = " | " if k == NodeKind.PROJ_JOIN else " & "
        text = ScenarioPrinter.proj(n.child(0), mine) + op + ScenarioPrinter.proj(n.child(1),
                                                                                  mine + 1)
        return "({})".format(text) if mine < level else text

    @staticmethod
    def history(n: Node) -> str:
        k = n.kind
        if k == NodeKind.HIST_REF:
            return n.value
        if k == NodeKind.HIST_EVENT:
            return "{}@{}".format(ScenarioPrinter.proj(n.child(), _ATOM), n.value)
        if k == NodeKind.HIST_PRODUCT:
            return " * ".join(ScenarioPrinter.history(c) for c in n.children)
        if k == NodeKind.HIST_POSITIONAL:
            return "[{}]".format(", ".join(
                "*" if c.kind == NodeKind.HIST_STAR else ScenarioPrinter.proj(c, _ATOM)
                for c in n.children))
        raise ValueError("not a history: {}".format(k))

    @staticmethod
    def framework(n: Node) -> str:
        terms = []
        for t in n.children:
            if t.kind == NodeKind.FAM_PRODUCT:
                terms.append("".join(
                    "{" + " + ".join(ScenarioPrinter.history(h) for h in g.children) + "}"
                    for g in t.children))
            else:
                terms.append(ScenarioPrinter.history(t))
        return " + ".join(terms)
