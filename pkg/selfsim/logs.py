from __future__ import annotations

import logging
import sys
from collections import deque
from datetime import datetime, timezone
from threading import Lock
from traceback import format_exception


PACKAGE_LOGGER = "selfsim"
_CAPACITY = 5000
_STREAM_FORMAT = "%(levelname)s %(name)s: %(message)s"


class LogBuffer:
    """Bounded ring of structured log entries, newest last."""

    def __init__(self, capacity: int = _CAPACITY) -> None:
        self._entries: deque[dict] = deque(maxlen=capacity)
        self._lock = Lock()

    def append(self, entry: dict) -> None:
        with self._lock:
            self._entries.append(entry)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def snapshot(self) -> list[dict]:
        with self._lock:
            return list(self._entries)


_BUFFER = LogBuffer()


def subsystem_of(logger_name: str) -> str:
    """``selfsim.nilpotent.subgroup`` -> ``nilpotent``; ``selfsim.cli.rep`` -> ``cli.rep``."""
    if not logger_name:
        return "root"
    head, _, rest = logger_name.partition(".")
    if head != PACKAGE_LOGGER:
        return head
    if not rest:
        return PACKAGE_LOGGER
    parts = rest.split(".")
    if parts[0] == "cli":
        return ".".join(parts[:2])
    return parts[0]


def _level_number(name: str | None) -> int | None:
    if not name:
        return None
    value = logging.getLevelName(name.upper())
    return value if isinstance(value, int) else None


class InMemoryLogHandler(logging.Handler):
    def __init__(self, buffer: LogBuffer) -> None:
        super().__init__(level=logging.DEBUG)
        self.buffer = buffer

    def emit(self, record: logging.LogRecord) -> None:
        entry = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "subsystem": subsystem_of(record.name),
            "message": record.getMessage(),
        }
        if record.exc_info:
            entry["exception"] = "".join(format_exception(*record.exc_info)).rstrip()
        self.buffer.append(entry)


_BUFFER_HANDLER = InMemoryLogHandler(_BUFFER)
_STREAM_HANDLER: logging.StreamHandler | None = None


def setup_runtime_logging(level: str | int = "WARNING", *, stream: bool = False) -> None:
    """Attach the ring buffer (and optionally stderr) to the package logger.

    Records never reach stdout, so command output stays byte-stable.
    """
    global _STREAM_HANDLER
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level if isinstance(level, int) else level.upper())
    if _BUFFER_HANDLER not in logger.handlers:
        logger.addHandler(_BUFFER_HANDLER)

    if _STREAM_HANDLER is not None:
        logger.removeHandler(_STREAM_HANDLER)
        _STREAM_HANDLER = None
    if stream:
        # bind to the current sys.stderr, which test capture may have replaced
        _STREAM_HANDLER = logging.StreamHandler(sys.stderr)
        _STREAM_HANDLER.setFormatter(logging.Formatter(_STREAM_FORMAT))
        logger.addHandler(_STREAM_HANDLER)


def clear_logs() -> None:
    _BUFFER.clear()


def get_recent_logs(limit: int = 200, min_level: str | None = None) -> list[dict]:
    entries = _BUFFER.snapshot()
    threshold = _level_number(min_level)
    if threshold is not None:
        entries = [entry for entry in entries if (_level_number(entry.get("level")) or 0) >= threshold]
    return entries[-limit:] if limit > 0 else []
