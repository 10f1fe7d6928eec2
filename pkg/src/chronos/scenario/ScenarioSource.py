# Scenario documents as read from disk or the corpus, and positions inside them.

import os


class SourceSpan:
    line: int = None
    col: int = None

    def __init__(self, line: int, col: int):
        self.line = line
        self.col = col

    def __eq__(self, other) -> bool:
        return isinstance(other, SourceSpan) and (self.line, self.col) == (other.line, other.col)

    def __hash__(self) -> int:
        return hash((self.line, self.col))

    def __repr__(self) -> str:
        return "{}:{}".format(self.line, self.col)


class ScenarioSource:

    _text: str = None
    _name: str = None

    def __init__(self, text: str, name: str = "<string>"):
        self._text = text
        self._name = name

    @staticmethod
    def fromPath(path: str) -> "ScenarioSource":
        with open(path, encoding="utf-8") as f:
            return ScenarioSource(f.read(), os.path.basename(path))

    def getText(self) -> str:
        return self._text

    def getName(self) -> str:
        return self._name

    def isEmpty(self) -> bool:
        return self._text.strip() == ""
