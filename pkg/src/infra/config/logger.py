import sys
from pathlib import Path

from loguru import logger

from src.domain.repositories.logger import ILogger

RECORD_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {module}:{function}:{line} | {message}"

__all__ = ["ILogger", "LoggerConfig"]


class LoggerConfig(ILogger):
    """
    Loguru setup for the simulator.

    stderr gets INFO (DEBUG with settings.debug); log_dir keeps a rotating
    DEBUG log of every process and a separate error log.
    """

    def __init__(self, settings=None):
        self.settings = settings
        self._logger = logger
        self._configured = False

    def configure(self) -> "LoggerConfig":
        if self._configured:
            return self

        self._logger.remove()
        log_dir = Path(self.settings.log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)

        self._logger.add(
            sys.stderr,
            format=RECORD_FORMAT,
            level="DEBUG" if self.settings.debug else "INFO",
            colorize=True,
        )
        self._logger.add(
            log_dir / "dmk_{time:YYYY-MM-DD}.log",
            rotation="5 MB",
            retention="10 days",
            format=RECORD_FORMAT,
            level="DEBUG",
            compression="zip",
            backtrace=True,
            diagnose=False,
        )
        self._logger.add(
            log_dir / "errors_{time:YYYY-MM-DD}.log",
            rotation="10 MB",
            retention="30 days",
            format=RECORD_FORMAT,
            level="ERROR",
            backtrace=True,
            diagnose=False,
        )

        self._configured = True
        self._logger.debug(
            f"Logger configured - environment {self.settings.environment}, "
            f"debug {self.settings.debug}, log_dir {log_dir}"
        )
        return self

    def get_logger(self):
        if not self._configured:
            self.configure()
        return self._logger
