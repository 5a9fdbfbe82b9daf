# fuzzred/fuzzy/__init__.py
from __future__ import annotations

from .sets import (
    FuzzyMat,
    FuzzyVec,
    afterset,
    asFuzzyMat,
    asFuzzyVec,
    eqEpsMat,
    eqEpsVec,
    foreset,
    identity,
    isReflexive,
    leqEpsMat,
    leqEpsVec,
    quantizedKey,
    truncateMat,
    truncateVec,
)
from .compose import (
    composeEpsMm,
    composeEpsMv,
    composeEpsVm,
    composeEpsVv,
    composeMm,
    composeMv,
    composeVm,
    composeVv,
    leftResidualEps,
    rightResidualEps,
)
from .preorders import isEpsFpo, isEpsTransitive

__all__ = [
    "FuzzyVec",
    "FuzzyMat",
    "asFuzzyVec",
    "asFuzzyMat",
    "identity",
    "truncateVec",
    "truncateMat",
    "leqEpsVec",
    "eqEpsVec",
    "leqEpsMat",
    "eqEpsMat",
    "isReflexive",
    "afterset",
    "foreset",
    "quantizedKey",
    "composeVv",
    "composeVm",
    "composeMv",
    "composeMm",
    "composeEpsVv",
    "composeEpsVm",
    "composeEpsMv",
    "composeEpsMm",
    "rightResidualEps",
    "leftResidualEps",
    "isEpsTransitive",
    "isEpsFpo",
]
