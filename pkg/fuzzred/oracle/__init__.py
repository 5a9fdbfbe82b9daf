# fuzzred/oracle/__init__.py
from __future__ import annotations

from .enumeration import backwardVectors, checkBudget, forwardVectors, walkWords, wordCount
from .language import EquivalenceVerdict, LanguageTable, checkEpsEquivalent, languageTable
from .invariance import verifyGreatest, verifyLeftInvariance, verifyRightInvariance

__all__ = [
    "wordCount",
    "checkBudget",
    "walkWords",
    "forwardVectors",
    "backwardVectors",
    "LanguageTable",
    "EquivalenceVerdict",
    "languageTable",
    "checkEpsEquivalent",
    "verifyRightInvariance",
    "verifyLeftInvariance",
    "verifyGreatest",
]
