"""Logging helpers for qmetric."""
from __future__ import annotations

import json
import logging
from logging import LogRecord
from pathlib import Path
from typing import Any, Dict

_RECORD_FIELDS = set(vars(LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}


class JsonFormatter(logging.Formatter):
    """Formats log records as single line JSON objects.

    Keys passed through ``extra=`` (suite, trial, command, path, ...) are
    copied into the payload.
    """

    def format(self, record: LogRecord) -> str:
        payload: Dict[str, Any] = {
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
            "timestamp": self.formatTime(record, datefmt="%Y-%m-%dT%H:%M:%S"),
        }
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        for key, value in record.__dict__.items():
            if key not in _RECORD_FIELDS and key not in payload:
                payload[key] = value
        return json.dumps(payload, ensure_ascii=False, default=str)


def configure_logging(log_path: str | Path | None = None, level: str | int = "INFO") -> None:
    """Configure the root logger to emit JSON lines to stderr or ``log_path``."""
    handler: logging.Handler
    if log_path:
        path = Path(log_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(path, encoding="utf-8")
    else:
        handler = logging.StreamHandler()

    handler.setFormatter(JsonFormatter())
    logging.basicConfig(level=level, handlers=[handler], force=True)


__all__ = ["configure_logging", "JsonFormatter"]
