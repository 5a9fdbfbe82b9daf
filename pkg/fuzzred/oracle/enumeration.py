# fuzzred/oracle/enumeration.py
from __future__ import annotations

from collections.abc import Callable, Iterator

import numpy as np

from fuzzred.automaton import Ffa, Word
from fuzzred.config.settings import config
from fuzzred.core.errors import EnumerationBudgetError
from fuzzred.fuzzy import FuzzyVec, composeMv, composeVm
from fuzzred.lattice import Lattice

__all__ = ["wordCount", "checkBudget", "walkWords", "forwardVectors", "backwardVectors"]

Step = Callable[[FuzzyVec, int], FuzzyVec]



def wordCount(s: int, k: int) -> int:
    """Number of words of length ≤ k over s symbols."""
    if s <= 1:
        return k + 1 if s == 1 else 1
    return (s ** (k + 1) - 1) // (s - 1)



def checkBudget(s: int, k: int | None, maxWords: int | None = None) -> int:
    """
    Raises:
        EnumerationBudgetError: k is unbounded or the word count exceeds the budget
    """
    if k is None:
        raise EnumerationBudgetError("exhaustive word enumeration needs a finite length")
    budget = int(maxWords if maxWords is not None else config("oracle.maxWords", 1_000_000))
    count = wordCount(s, k)
    if count > budget:
        raise EnumerationBudgetError(f"{count} words of length <= {k} over {s} symbols exceed the budget of {budget}")
    return count



def walkWords(root: FuzzyVec, s: int, k: int, step: Step, *, prepend: bool = False) -> Iterator[tuple[Word, FuzzyVec]]:
    """
    Depth-first walk of every word of length ≤ k, one vector per word.

    The child of `word` by symbol j is `word + (j,)`, or `(j,) + word` with
    `prepend`; its vector is `step(parent vector, j)`.
    """
    stack: list[tuple[Word, FuzzyVec]] = [((), root)]
    while stack:
        word, vec = stack.pop()
        yield word, vec
        if len(word) == k:
            continue
        for j in reversed(range(s)):
            child = (j, *word) if prepend else (*word, j)
            stack.append((child, step(vec, j)))



def forwardVectors(a: Ffa, k: int, lat: Lattice) -> Iterator[tuple[Word, FuzzyVec]]:
    """(w, I_w) with I_w = I ∘ δ_w, exact compositions."""
    return walkWords(np.asarray(a.initial), a.s, k, lambda vec, j: composeVm(vec, a.delta[j], lat))



def backwardVectors(a: Ffa, k: int, lat: Lattice) -> Iterator[tuple[Word, FuzzyVec]]:
    """(w, F_w) with F_w = δ_w ∘ F, exact compositions."""
    return walkWords(np.asarray(a.final), a.s, k, lambda vec, j: composeMv(a.delta[j], vec, lat), prepend=True)
