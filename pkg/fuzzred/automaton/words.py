# fuzzred/automaton/words.py
from __future__ import annotations

from collections.abc import Sequence
from typing import TypeAlias

import numpy as np

from fuzzred.core.errors import SymbolError
from fuzzred.fuzzy import FuzzyMat, FuzzyVec, composeMm, composeMv, composeVm, composeVv
from fuzzred.lattice import Lattice
from .ffa import Ffa

__all__ = [
    "Word",
    "checkWord",
    "formatWord",
    "deltaWord",
    "backward",
    "forward",
    "languageDegree",
]

# Sequence of symbol indices; the empty tuple is the empty word.
Word: TypeAlias = tuple[int, ...]



def checkWord(a: Ffa, w: Sequence[int]) -> Word:
    word = tuple(int(sym) for sym in w)
    for sym in word:
        if not 0 <= sym < a.s:
            raise SymbolError(f"symbol index {sym} outside alphabet of size {a.s}")
    return word



def formatWord(a: Ffa, w: Sequence[int]) -> str:
    return " ".join(a.alphabet[sym] for sym in w) if w else "<empty>"



def deltaWord(a: Ffa, w: Sequence[int], lat: Lattice) -> FuzzyMat:
    """δ_w; the empty word gives the identity relation."""
    word = checkWord(a, w)
    result: FuzzyMat = np.eye(a.n)
    for sym in word:
        result = composeMm(result, a.delta[sym], lat)
    return result



def backward(a: Ffa, w: Sequence[int], lat: Lattice) -> FuzzyVec:
    """F_w = δ_w ∘ F, built right to left as F_{σu} = δ_σ ∘ F_u."""
    word = checkWord(a, w)
    vec: FuzzyVec = np.array(a.final)
    for sym in reversed(word):
        vec = composeMv(a.delta[sym], vec, lat)
    return vec



def forward(a: Ffa, w: Sequence[int], lat: Lattice) -> FuzzyVec:
    """I_w = I ∘ δ_w, built left to right as I_{uσ} = I_u ∘ δ_σ."""
    word = checkWord(a, w)
    vec: FuzzyVec = np.array(a.initial)
    for sym in word:
        vec = composeVm(vec, a.delta[sym], lat)
    return vec



def languageDegree(a: Ffa, w: Sequence[int], lat: Lattice) -> float:
    """L(A)(w) = I ∘ δ_w ∘ F."""
    return composeVv(a.initial, backward(a, w, lat), lat)
