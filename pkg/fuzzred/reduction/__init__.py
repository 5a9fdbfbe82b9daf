# fuzzred/reduction/__init__.py
from __future__ import annotations

from .models import ReductionConfig, ReductionReport, RightReductionStats, formatK
from .closure import ClosureSet, closure
from .invariance import greatestLeftInvariance, greatestRightInvariance, stabilizationDepth
from .quotient import afterSetAutomaton, aftersetRepresentatives
from .soft import reduceByLeftInvariance, reduceByRightInvariance, softStateReduction, softStateReduction0

__all__ = [
    "ReductionConfig",
    "ReductionReport",
    "RightReductionStats",
    "formatK",
    "ClosureSet",
    "closure",
    "greatestRightInvariance",
    "greatestLeftInvariance",
    "stabilizationDepth",
    "afterSetAutomaton",
    "aftersetRepresentatives",
    "reduceByRightInvariance",
    "reduceByLeftInvariance",
    "softStateReduction0",
    "softStateReduction",
]
