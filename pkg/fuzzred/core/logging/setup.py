# fuzzred/core/logging/setup.py
from __future__ import annotations

import logging
import logging.handlers
import sys
from typing import TextIO

from fuzzred.config.settings import config, configBool
from .formatters import DevFormatter, JsonFormatter

__all__ = ["configureLogging", "getLogger"]

# Handlers installed by configureLogging(); replaced on every call, foreign handlers are left alone.
_installedHandlers: list[logging.Handler] = []



def configureLogging(level: str | None = None, *, stream: TextIO | None = None) -> None:
    """
    Initiate the process-wide logging configuration.

      - Console handler on stderr (stdout is reserved for automata, reports and CSV)
      - `logging.json` switches the console to one-line JSON records
      - `logging.file` adds a rotating JSON file log
      - `level` overrides `logging.level` (the CLI maps --verbose/--debug onto it)
    """
    levelName = str(level or config("logging.level", "WARNING")).upper()
    rootLevel = getattr(logging, levelName, logging.WARNING)

    root = logging.getLogger()
    for handler in _installedHandlers:
        root.removeHandler(handler)
        handler.close()
    _installedHandlers.clear()
    root.setLevel(rootLevel)

    consoleHandler = logging.StreamHandler(stream or sys.stderr)
    consoleHandler.setLevel(rootLevel)
    consoleHandler.setFormatter(JsonFormatter() if configBool("logging.json", False) else DevFormatter())
    _installedHandlers.append(consoleHandler)

    logFile = config("logging.file", None)
    if logFile:
        fileHandler = logging.handlers.RotatingFileHandler(
            str(logFile),
            maxBytes=10 * 1024 * 1024,
            backupCount=5,
            encoding="utf-8",
        )
        fileHandler.setLevel(rootLevel)
        fileHandler.setFormatter(JsonFormatter())
        _installedHandlers.append(fileHandler)

    for handler in _installedHandlers:
        root.addHandler(handler)



def getLogger(name: str) -> logging.Logger:
    """Returns a logger under the `fuzzred` namespace."""
    return logging.getLogger(name if name.startswith("fuzzred") else f"fuzzred.{name}")
