"""
Corpus: the bundled scenario files, looked up by a short stable name.  The
built-in table below lists the worked models shipped with the package;
~/.chronos/corpus.txt can be used to augment the list with lines of the form

    name=/path/to/scenario.chs

In the event of a name collision between the user's corpus.txt and the
built-in entries, the user's file trumps.
"""

import os
from typing import List, Tuple

from chronos.base.ChronosError import UnknownCorpusError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger
from chronos.scenario.ScenarioSource import ScenarioSource


CORPUS_PREFIX = "corpus:"
_CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")


class CorpusEntry:
    name: str = None
    path: str = None
    description: str = None
    section: str = None
    builtin: bool = True

    def __init__(self, name: str, path: str, description: str, section: str = None,
                 builtin: bool = True):
        self.name = name
        self.path = path
        self.description = description
        # section of the source document the model comes from; None for user entries
        self.section = section
        self.builtin = builtin

    def toDict(self) -> dict:
        return {"name": self.name, "path": self.path, "description": self.description,
                "section": self.section, "builtin": self.builtin}

    def __repr__(self) -> str:
        return "CorpusEntry({}, {})".format(self.name, self.path)


class Corpus:

    _CORPUS = {
        "spin-half": ("spin-half.chs", "6.1",
                      "spin-half particle: z and x refinements of complete ignorance"),
        "oscillator": ("oscillator.chs", "6.2",
                       "harmonic oscillator: the meaning of P depends on the framework"),
        "spin-measurement": ("spin-measurement.chs", "6.3",
                             "spin measurement with a pure-state apparatus"),
        "spin-measurement-mixed": ("spin-measurement-mixed.chs", "6.3",
                                   "spin measurement with a three-state apparatus"),
        "three-state": ("three-state.chs", "6.4",
                        "three-box paradox: certainty in box a and in box b"),
    }

    @staticmethod
    def _userEntries() -> List[CorpusEntry]:
        path = os.path.join(ChronosConfig.getUserDir(), "corpus.txt")
        if not os.path.exists(path):
            Logger.debug("No custom ~/.chronos/corpus.txt - using built-in corpus", "corpus")
            return []
        Logger.info("Loading custom corpus entries from ~/.chronos/corpus.txt", "corpus")
        entries = []
        with open(path) as f:
            for line in f:
                line = line.strip()
                if (line == "") or line.startswith("#") or ("=" not in line):
                    continue
                name, var = line.split("=", 1)
                name = name.strip()
                var = os.path.expanduser(var.strip())
                Logger.info("Registering scenario " + var + " for corpus name " + name,
                            "corpus")
                entries.append(CorpusEntry(name, var, "user entry", builtin=False))
        return entries

    @staticmethod
    def list() -> List[CorpusEntry]:
        entries = {}
        for name, (fileName, section, description) in Corpus._CORPUS.items():
            entries[name] = CorpusEntry(name, os.path.join(_CORPUS_DIR, fileName),
                                        description, section)
        for entry in Corpus._userEntries():
            if entry.name in entries:
                Logger.info("corpus.txt overrides built-in entry " + entry.name, "corpus")
            entries[entry.name] = entry
        return [entries[k] for k in sorted(entries)]

    @staticmethod
    def getEntry(name: str) -> CorpusEntry:
        for entry in Corpus.list():
            if entry.name == name:
                return entry
        raise UnknownCorpusError("no corpus entry named '{}'".format(name), name=name)

    @staticmethod
    def load(name: str) -> ScenarioSource:
        entry = Corpus.getEntry(name)
        Logger.info("Obtaining scenario " + entry.path + " for " + name, "corpus")
        with open(entry.path, encoding="utf-8") as f:
            return ScenarioSource(f.read(), CORPUS_PREFIX + name)

    @staticmethod
    def resolve(target: str) -> ScenarioSource:
        # "corpus:NAME" or a file path
        if target.startswith(CORPUS_PREFIX):
            return Corpus.load(target[len(CORPUS_PREFIX):])
        return ScenarioSource.fromPath(target)

    @staticmethod
    def names() -> List[str]:
        return [e.name for e in Corpus.list()]

    @staticmethod
    def builtinNames() -> Tuple[str, ...]:
        return tuple(sorted(Corpus._CORPUS))
