# fuzzred/cli/__init__.py
from __future__ import annotations

from .formats import AutomatonFormat, formatValue, parseAutomaton, serializeAutomaton
from .options import RunOptions, buildRunOptions, parseK
from .main import RunOutcome, run

__all__ = [
    "AutomatonFormat",
    "formatValue",
    "parseAutomaton",
    "serializeAutomaton",
    "RunOptions",
    "buildRunOptions",
    "parseK",
    "RunOutcome",
    "run",
]
