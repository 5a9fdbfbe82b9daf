# fuzzred/sweep/__init__.py
from __future__ import annotations

from .models import RandomShape, SweepRow, SweepSpec, ValueSet
from .generator import generateRandom
from .runner import CSV_COLUMNS, rowsToCsv, runCell, runSweep

__all__ = [
    "ValueSet",
    "RandomShape",
    "SweepSpec",
    "SweepRow",
    "generateRandom",
    "CSV_COLUMNS",
    "runSweep",
    "runCell",
    "rowsToCsv",
]
