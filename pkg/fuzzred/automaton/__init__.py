# fuzzred/automaton/__init__.py
from __future__ import annotations

from .ffa import Ffa, defaultAlphabet
from .words import Word, backward, checkWord, deltaWord, formatWord, forward, languageDegree
from .transform import reachableFrom, reverse, supportGraph, trim

__all__ = [
    "Ffa",
    "defaultAlphabet",
    "Word",
    "checkWord",
    "formatWord",
    "deltaWord",
    "backward",
    "forward",
    "languageDegree",
    "reverse",
    "trim",
    "supportGraph",
    "reachableFrom",
]
