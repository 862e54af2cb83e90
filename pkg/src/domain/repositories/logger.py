"""Logger interface."""

from abc import ABC, abstractmethod
from pathlib import Path

RUN_LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {message}"


class ILogger(ABC):
    """Logger interface."""

    @abstractmethod
    def get_logger(self):
        """
        Gets the configured logger.

        Returns:
            Logger: Loguru logger
        """
        raise NotImplementedError

    @abstractmethod
    def configure(self) -> "ILogger":
        """Installs the process-wide handlers."""
        raise NotImplementedError

    def attach_run_log(self, path: Path) -> int:
        """
        Mirrors INFO and above into a log file that lives with a run's outputs.

        Args:
            path: Log file, created together with its parent directory

        Returns:
            int: Handler id to pass to detach
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        return self.get_logger().add(
            str(path), format=RUN_LOG_FORMAT, level="INFO", mode="w", encoding="utf-8"
        )

    def detach(self, handler_id: int) -> None:
        self.get_logger().remove(handler_id)
