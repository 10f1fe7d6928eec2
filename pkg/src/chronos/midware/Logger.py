"""
This class provides a wrapper around Python's built-in logging module,
offering simplified logging methods tagged with the engine stage that emits
them.  Output goes to stderr; stdout belongs to results.
"""

import logging
import datetime
import os


class Logger:
    _logger = None

    # create a singleton logger
    def __init__(self):
        logging.basicConfig()
        self._logger = logging.getLogger("chronos")
        level = os.getenv("CHRONOS_LOG_LEVEL", "INFO").upper()
        self._logger.setLevel(getattr(logging, level, logging.INFO))

    def _getTimestamp(self) -> str:
        current_time = datetime.datetime.now(datetime.timezone.utc)
        formatted_time = current_time.strftime("%Y-%m-%dT%H:%M:%SZ")
        return formatted_time

    def _buildMsg(self, msg: str, status: str) -> str:
        if (status is None):
            status = ""
        if (msg is None):
            msg = ""
        out = " {} [{}] {}".format(
            self._getTimestamp(),
            status,
            msg,
        )
        return out

    def setLevel(self, level) -> None:
        if isinstance(level, str):
            level = getattr(logging, level.upper(), logging.INFO)
        self._logger.setLevel(level)

    def getLevel(self) -> int:
        return self._logger.level

    def debug(self, msg: str, status: str = None) -> None:
        if self._logger.isEnabledFor(logging.DEBUG):
            self._logger.debug(self._buildMsg(msg, status))

    def info(self, msg: str, status: str = None) -> None:
        self._logger.info(self._buildMsg(msg, status))

    def warning(self, msg: str, status: str = None) -> None:
        self._logger.warning(self._buildMsg(msg, status))

    def error(self, msg: str, status: str = None) -> None:
        self._logger.error(self._buildMsg(msg, status))



# create a singleton logger
Logger = Logger()
