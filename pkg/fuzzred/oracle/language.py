# fuzzred/oracle/language.py
from __future__ import annotations

import logging
from dataclasses import dataclass

from fuzzred.automaton import Ffa, Word
from fuzzred.config.settings import config
from fuzzred.core.errors import AlphabetMismatchError
from fuzzred.fuzzy import composeVv
from fuzzred.lattice import Lattice, eqEps
from .enumeration import checkBudget, forwardVectors

logger = logging.getLogger(__name__)

__all__ = ["LanguageTable", "EquivalenceVerdict", "languageTable", "checkEpsEquivalent"]



@dataclass(frozen=True)
class LanguageTable:
    """Degrees of every word of length ≤ k, keyed by word."""
    k: int
    alphabet: tuple[str, ...]
    degrees: dict[Word, float]

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, word: Word) -> float:
        return self.degrees[word]

    def words(self) -> list[Word]:
        """Words in length-then-lexicographic order."""
        return sorted(self.degrees, key=lambda w: (len(w), w))



@dataclass(frozen=True)
class EquivalenceVerdict:
    equal: bool
    eps: float
    k: int
    word: Word | None = None
    left: float | None = None
    right: float | None = None

    def __bool__(self) -> bool:
        return self.equal



def languageTable(a: Ffa, k: int, lat: Lattice, *, maxWords: int | None = None) -> LanguageTable:
    """
    L^{≤k}(a) by exhaustive enumeration, one forward vector per prefix.

    Raises:
        EnumerationBudgetError: more words than `oracle.maxWords`
    """
    checkBudget(a.s, k, maxWords)
    degrees = {word: composeVv(vec, a.final, lat) for word, vec in forwardVectors(a, k, lat)}
    return LanguageTable(k=k, alphabet=a.alphabet, degrees=degrees)



def checkEpsEquivalent(
    a: Ffa,
    b: Ffa,
    eps: float,
    k: int,
    lat: Lattice,
    *,
    tol: float | None = None,
    maxWords: int | None = None,
) -> EquivalenceVerdict:
    """
    Compares the languages of `a` and `b` on every word of length ≤ k with =ε.

    Returns the first disagreeing word in length-then-lexicographic order,
    together with both degrees.

    Raises:
        AlphabetMismatchError: different alphabets
        EnumerationBudgetError: more words than `oracle.maxWords`
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {list(a.alphabet)} vs {list(b.alphabet)}")
    slack = float(tol if tol is not None else config("oracle.tolerance", 1e-9))

    left = languageTable(a, k, lat, maxWords=maxWords)
    right = languageTable(b, k, lat, maxWords=maxWords)
    for word in left.words():
        x, y = left[word], right[word]
        if not eqEps(x, y, eps, slack):
            logger.debug("counterexample %s: %r vs %r", word, x, y)
            return EquivalenceVerdict(equal=False, eps=eps, k=k, word=word, left=x, right=y)
    return EquivalenceVerdict(equal=True, eps=eps, k=k)
