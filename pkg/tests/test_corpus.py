# The bundled worked models, answered end to end.

import functools
import math

import numpy as np
import pytest

from chronos.base.ChronosError import UnknownCorpusError
from chronos.reasoning.Reasoner import Reasoner
from chronos.reasoning.Verdict import VerdictKind
from chronos.scenario.Corpus import Corpus, CORPUS_PREFIX
from chronos.scenario.ScenarioElaborator import ScenarioElaborator
from chronos.scenario.ScenarioParser import ScenarioParser

from tests.helpers import bruteForceGram


@functools.lru_cache(maxsize=None)
def scenario(name):
    return ScenarioElaborator.elaborate(ScenarioParser.parse(Corpus.load(name)))


def answer(name, query):
    s = scenario(name)
    return s.answer(s.getQuery(query))


def probability(name, query):
    v = answer(name, query)
    assert v.hasProbability(), "{} is {}".format(query, v)
    return v.getProbability()


# ***********************************************************************
# listing

def test_builtin_entries(monkeypatch, tmp_path):
    monkeypatch.setenv("HOME", str(tmp_path))
    names = Corpus.names()
    assert names == ["oscillator", "spin-half", "spin-measurement", "spin-measurement-mixed",
                     "three-state"]
    assert all(e.builtin for e in Corpus.list())
    sections = {e.name: e.section for e in Corpus.list()}
    assert sections == {"spin-half": "6.1", "oscillator": "6.2", "spin-measurement": "6.3",
                        "spin-measurement-mixed": "6.3", "three-state": "6.4"}
    with pytest.raises(UnknownCorpusError):
        Corpus.getEntry("no-such-model")


def test_user_entries_extend_and_override(monkeypatch, tmp_path):
    monkeypatch.setenv("HOME", str(tmp_path))
    (tmp_path / ".chronos").mkdir()
    mine = tmp_path / "mine.chs"
    mine.write_text("space dim 2;\n")
    (tmp_path / ".chronos" / "corpus.txt").write_text(
        "# local models\n\nmine={}\nspin-half={}\nnot an entry\n".format(mine, mine))
    entries = {e.name: e for e in Corpus.list()}
    assert len(entries) == 6
    assert not entries["mine"].builtin
    assert entries["mine"].section is None
    assert entries["spin-half"].path == str(mine)
    assert Corpus.load("mine").getName() == CORPUS_PREFIX + "mine"


def test_resolve_file_path(tmp_path):
    path = tmp_path / "local.chs"
    path.write_text("space dim 3;\n")
    src = Corpus.resolve(str(path))
    assert src.getName() == "local.chs"
    assert Corpus.resolve("corpus:spin-half").getName() == "corpus:spin-half"


# ***********************************************************************
# spin half

@pytest.mark.parametrize("query", ["zUp", "zDown", "xUp", "xDown"])
def test_spin_half_even_chances(query):
    assert probability("spin-half", query) == pytest.approx(0.5, abs=1e-12)


def test_spin_half_joint_question_is_meaningless():
    assert answer("spin-half", "both").getKind() == VerdictKind.MEANINGLESS


def test_spin_half_zxz_witness():
    s = scenario("spin-half")
    zxz = [f for f in s.getDeclaredFrameworks() if f.name == "ZXZ"][0]
    assert zxz.expectInconsistent
    assert not zxz.report.getVerdict()
    assert zxz.report.getWorstMagnitude() == pytest.approx(0.25, abs=1e-9)
    oracle = np.abs(bruteForceGram(list(zxz.decomposition.getMinimal()), s.getFamily()))
    np.fill_diagonal(oracle, 0.0)
    assert oracle.max() == pytest.approx(0.25, abs=1e-9)
    assert "ZXZ" not in s.getFrameworks()


# ***********************************************************************
# measurement models

MEASUREMENT = [
    ("upRecordsUp", 1.0),
    ("upRecordsDown", 0.0),
    ("pointerUp", 0.5),
    ("pointerDown", 0.5),
    ("upBeforeUp", 1.0),
    ("downBeforeUp", 0.0),
    ("xRecordsUp", 0.5),
    ("xRecordsDown", 0.5),
    ("xBeforeUp", 0.5),
    ("xMinusBeforeUp", 0.5),
    ("xRecordsSuperposed", 1.0),
    ("xRecordsAntiSuperposed", 0.0),
    ("zInTransit", 1.0),
    ("xInTransit", 1.0),
]


@pytest.mark.parametrize("model", ["spin-measurement", "spin-measurement-mixed"])
@pytest.mark.parametrize("query,expected", MEASUREMENT)
def test_measurement_probabilities(model, query, expected):
    assert probability(model, query) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("model", ["spin-measurement", "spin-measurement-mixed"])
def test_measurement_verdict_kinds(model):
    assert answer(model, "upRecordsUp").getKind() == VerdictKind.TRUE
    assert answer(model, "upRecordsDown").getKind() == VerdictKind.FALSE
    assert answer(model, "pointerUp").getKind() == VerdictKind.PROBABILITY
    assert answer(model, "zAndXInTransit").getKind() == VerdictKind.MEANINGLESS


def test_pure_and_mixed_apparatus_agree():
    pure = scenario("spin-measurement")
    mixed = scenario("spin-measurement-mixed")
    assert [q.name for q in pure.getQueries()] == [q.name for q in mixed.getQueries()]
    for q in pure.getQueries():
        a = pure.answer(q)
        b = mixed.answer(mixed.getQuery(q.name))
        assert a.getKind() == b.getKind(), q.name
        if a.hasProbability():
            assert a.getProbability() == pytest.approx(b.getProbability(), abs=1e-9)


@pytest.mark.parametrize("model", ["spin-measurement", "spin-measurement-mixed",
                                   "three-state", "oscillator"])
def test_declared_frameworks_are_consistent(model):
    for f in scenario(model).getDeclaredFrameworks():
        assert f.report.getVerdict(), f.name
        assert not f.expectInconsistent


def test_measurement_framework_sizes():
    s = scenario("spin-measurement")
    sizes = {f.name: f.decomposition.size() for f in s.getDeclaredFrameworks()}
    assert sizes["Ready"] == 2
    assert sizes["ZPointer"] == 7
    assert sizes["XThenZ"] == 13


# ***********************************************************************
# three-box paradox

def test_three_state_certainties():
    assert answer("three-state", "inA").getKind() == VerdictKind.TRUE
    assert answer("three-state", "inB").getKind() == VerdictKind.TRUE
    assert answer("three-state", "inAandB").getKind() == VerdictKind.MEANINGLESS
    assert probability("three-state", "found") == pytest.approx(1 / 9, abs=1e-12)


def test_three_state_frameworks_are_incompatible():
    frameworks = scenario("three-state").getFrameworks()
    assert not Reasoner.compatible([frameworks["MiddleA"], frameworks["MiddleB"]])
    assert Reasoner.isRefinement(frameworks["Ends"], frameworks["MiddleA"])
    assert Reasoner.isRefinement(frameworks["Ends"], frameworks["MiddleB"])


# ***********************************************************************
# oscillator

def test_oscillator():
    assert answer("oscillator", "low").getKind() == VerdictKind.TRUE
    for query in ("ground", "excited", "superposedPlus"):
        assert probability("oscillator", query) == pytest.approx(0.5, abs=1e-12)
    assert answer("oscillator", "groundAndPlus").getKind() == VerdictKind.MEANINGLESS
    assert answer("oscillator", "groundPersists").getKind() == VerdictKind.TRUE
    assert probability("oscillator", "plusPersists") == \
        pytest.approx((1 + math.cos(1.0)) / 2, abs=1e-12)
