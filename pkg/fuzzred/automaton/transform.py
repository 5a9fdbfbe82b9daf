# fuzzred/automaton/transform.py
from __future__ import annotations

import logging
from collections import deque

import numpy as np
from numpy.typing import NDArray

from .ffa import Ffa

logger = logging.getLogger(__name__)

__all__ = ["reverse", "trim", "supportGraph", "reachableFrom"]



def reverse(a: Ffa) -> Ffa:
    """Transposes every transition relation and swaps the initial and final vectors."""
    return Ffa(
        initial=a.final,
        delta=tuple(np.ascontiguousarray(mat.T) for mat in a.delta),
        final=a.initial,
        alphabet=a.alphabet,
    )



def supportGraph(a: Ffa) -> NDArray[np.bool_]:
    """Boolean adjacency: p → q iff some symbol moves p to q with a positive degree."""
    adjacency = np.zeros((a.n, a.n), dtype=bool)
    for mat in a.delta:
        adjacency |= mat > 0.0
    return adjacency



def reachableFrom(adjacency: NDArray[np.bool_], sources: NDArray[np.bool_]) -> NDArray[np.bool_]:
    seen = np.array(sources, dtype=bool)
    queue = deque(int(q) for q in np.flatnonzero(seen))
    while queue:
        state = queue.popleft()
        for nxt in np.flatnonzero(adjacency[state] & ~seen):
            seen[nxt] = True
            queue.append(int(nxt))
    return seen



def trim(a: Ffa) -> tuple[Ffa, tuple[int, ...]]:
    """
    Drops states that are unreachable from supp(I) or cannot reach supp(F).

    Returns the trimmed automaton and the original indices of the kept states
    (ascending). The result may have no states at all.
    """
    adjacency = supportGraph(a)
    reachable = reachableFrom(adjacency, a.initial > 0.0)
    productive = reachableFrom(adjacency.T, a.final > 0.0)
    kept = tuple(int(q) for q in np.flatnonzero(reachable & productive))
    if len(kept) == a.n:
        return a, kept

    logger.debug("trim keeps %d of %d states, dropped %s", len(kept), a.n,
                 sorted(set(range(a.n)) - set(kept)))
    index = np.array(kept, dtype=np.intp)
    trimmed = Ffa(
        initial=a.initial[index],
        delta=tuple(mat[np.ix_(index, index)] for mat in a.delta),
        final=a.final[index],
        alphabet=a.alphabet,
    )
    return trimmed, kept
