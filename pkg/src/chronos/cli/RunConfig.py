# How one invocation of the command line should run: which scenario, in which
# output format, and with which overrides.  Unset overrides fall through to the
# scenario file and then to ChronosConfig.

from enum import Enum

from chronos.base.ChronosBase import ChronosBase
from chronos.base.ChronosError import InvalidConfigError
from chronos.framework.ConsistencyReport import ConsistencyMode
from chronos.midware.ChronosConfig import ChronosConfig


class _RunConfigFields(Enum):
    TARGET = "target"
    OUTPUT_FORMAT = "format"
    MODE = "mode"
    TOL = "tol"
    TOL_PROB = "tolProb"
    WORKERS = "workers"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


class RunConfig(ChronosBase):

    def __init__(self, target: str, outputFormat: OutputFormat = OutputFormat.TEXT,
                 mode: ConsistencyMode = None, tol: float = None, tolProb: float = None,
                 workers: int = None):
        super(RunConfig, self).__init__(None)
        if (target is None) or (target.strip() == ""):
            raise InvalidConfigError("exactly one scenario file or corpus name is required")
        for name, value in (("tol", tol), ("tol-prob", tolProb), ("workers", workers)):
            if (value is not None) and (value <= 0):
                raise InvalidConfigError("--{} must be positive, got {}".format(name, value),
                                         variable=name, value=value)
        self.setTarget(target)
        self.setOutputFormat(outputFormat)
        self.setMode(mode)
        self.setTol(tol)
        self.setTolProb(tolProb)
        self.setWorkers(workers)

    def setTarget(self, target: str) -> None:
        self._setArg(_RunConfigFields.TARGET.value, target)

    def getTarget(self) -> str:
        return self._getArg(_RunConfigFields.TARGET.value)

    def setOutputFormat(self, outputFormat: OutputFormat) -> None:
        self._setArg(_RunConfigFields.OUTPUT_FORMAT.value, outputFormat.value)

    def getOutputFormat(self) -> OutputFormat:
        return OutputFormat(self._getArg(_RunConfigFields.OUTPUT_FORMAT.value))

    def isJson(self) -> bool:
        return self.getOutputFormat() == OutputFormat.JSON

    def setMode(self, mode: ConsistencyMode) -> None:
        self._setArg(_RunConfigFields.MODE.value, None if mode is None else mode.value)

    def getMode(self) -> ConsistencyMode:
        mode = self._getArg(_RunConfigFields.MODE.value)
        return ConsistencyMode.STRONG if (mode is None) else ConsistencyMode(mode)

    def setTol(self, tol: float) -> None:
        self._setArg(_RunConfigFields.TOL.value, tol)

    def getTol(self) -> float:
        return self._getArg(_RunConfigFields.TOL.value)

    def setTolProb(self, tolProb: float) -> None:
        self._setArg(_RunConfigFields.TOL_PROB.value, tolProb)

    def getTolProb(self) -> float:
        return ChronosConfig.resolveTolProb(self._getArg(_RunConfigFields.TOL_PROB.value))

    def setWorkers(self, workers: int) -> None:
        self._setArg(_RunConfigFields.WORKERS.value, workers)

    def getWorkers(self) -> int:
        workers = self._getArg(_RunConfigFields.WORKERS.value)
        return ChronosConfig.getWorkers() if (workers is None) else workers
