import logging

import pytest

from chronos.base.ChronosError import ChronosError, ChronosErrorCode, InvalidConfigError
from chronos.midware.ChronosConfig import ChronosConfig
from chronos.midware.Logger import Logger


@pytest.fixture
def env(monkeypatch):
    for name in ("CHRONOS_TOL", "CHRONOS_TOL_PROB", "CHRONOS_MAX_DIM", "CHRONOS_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    yield monkeypatch
    monkeypatch.undo()
    ChronosConfig.reload()


def test_defaults(env):
    ChronosConfig.reload()
    assert ChronosConfig.getTol() == 1e-9
    assert ChronosConfig.getTolProb() == 1e-9
    assert ChronosConfig.getMaxDim() == 64
    assert ChronosConfig.getWorkers() == 4


def test_environment_overrides(env):
    env.setenv("CHRONOS_TOL", "1e-7")
    env.setenv("CHRONOS_WORKERS", "2")
    env.setenv("CHRONOS_MAX_DIM", " ")
    ChronosConfig.reload()
    assert ChronosConfig.getTol() == 1e-7
    assert ChronosConfig.getWorkers() == 2
    assert ChronosConfig.getMaxDim() == 64
    assert ChronosConfig.resolveTol() == 1e-7
    assert ChronosConfig.resolveTol(1e-3) == 1e-3


@pytest.mark.parametrize("name,raw", [
    ("CHRONOS_TOL", "tiny"),
    ("CHRONOS_TOL_PROB", "-1e-9"),
    ("CHRONOS_WORKERS", "2.5"),
    ("CHRONOS_MAX_DIM", "0"),
])
def test_invalid_environment(env, name, raw):
    env.setenv(name, raw)
    with pytest.raises(InvalidConfigError) as info:
        ChronosConfig.reload()
    assert info.value.getCode() == ChronosErrorCode.INVALID_CONFIG
    assert info.value.getDetails()["variable"] == name


def test_user_dir(env, tmp_path):
    env.setenv("HOME", str(tmp_path))
    assert ChronosConfig.getUserDir() == str(tmp_path / ".chronos")


def test_error_text():
    err = ChronosError("something broke", where="here")
    assert err.getCode() == ChronosErrorCode.INTERNAL
    assert str(err) == "INTERNAL: something broke"
    assert err.getDetails() == {"where": "here"}


def test_logger_level(caplog):
    before = Logger.getLevel()
    try:
        Logger.setLevel("debug")
        assert Logger.getLevel() == logging.DEBUG
        with caplog.at_level(logging.DEBUG, logger="chronos"):
            Logger.debug("hello", "test")
        assert "[test] hello" in caplog.text
    finally:
        Logger.setLevel(before)
