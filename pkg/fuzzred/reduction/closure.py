# fuzzred/reduction/closure.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from fuzzred.automaton import Ffa
from fuzzred.core.errors import ClosureCapError, DimensionError
from fuzzred.fuzzy import FuzzyVec, composeEpsMv, quantizedKey, truncateVec
from .models import ReductionConfig

logger = logging.getLogger(__name__)

__all__ = ["ClosureSet", "closure"]



@dataclass
class ClosureSet:
    """
    The set of truncated backward vectors {(F_w)_ε : |w| ≤ k}.

    - `vectors` keeps insertion order; `keys` maps each quantized key to its index
    - `frontier` holds the indices inserted by the last round
    - `steps` counts (vector, symbol) compositions over all rounds
    - `halted` is True when a round produced nothing new (the set is then complete for every k)
    """
    vectors: list[FuzzyVec] = field(default_factory=list)
    keys: dict[bytes, int] = field(default_factory=dict)
    frontier: list[int] = field(default_factory=list)
    steps: int = 0
    rounds: int = 0
    halted: bool = False

    def __len__(self) -> int:
        return len(self.vectors)

    def insert(self, vec: FuzzyVec, precision: float) -> int | None:
        """Adds `vec` unless an equal vector (up to `precision`) is present; returns the new index."""
        key = quantizedKey(vec, precision)
        if key in self.keys:
            return None
        idx = len(self.vectors)
        self.keys[key] = idx
        self.vectors.append(vec)
        return idx

    @property
    def stabilizationDepth(self) -> int | None:
        return self.rounds - 1 if self.halted else None



def closure(a: Ffa, cfg: ReductionConfig) -> ClosureSet:
    """
    Breadth-first closure of F_ε under g = δσ ∘ε f, for at most `cfg.k` rounds.

    Each round walks the frontier in insertion order and the alphabet in symbol
    order; every (f, σ) pair is one step.

    Raises:
        DimensionError: automaton without states
        ClosureCapError: more than `cfg.maxClosure` vectors
    """
    if a.n == 0:
        raise DimensionError("closure needs an automaton with at least one state")

    eps, lat, precision = cfg.eps, cfg.lattice, cfg.precision
    result = ClosureSet()
    result.insert(truncateVec(a.final, eps), precision)
    result.frontier = [0]

    while cfg.k is None or result.rounds < cfg.k:
        result.rounds += 1
        nextFrontier: list[int] = []
        for idx in result.frontier:
            f = result.vectors[idx]
            for mat in a.delta:
                result.steps += 1
                added = result.insert(composeEpsMv(mat, f, eps, lat), precision)
                if added is None:
                    continue
                if len(result) > cfg.maxClosure:
                    raise ClosureCapError(cfg.maxClosure, result.steps)
                nextFrontier.append(added)
        result.frontier = nextFrontier
        logger.debug("closure round %d: %d new, %d total", result.rounds, len(nextFrontier), len(result))
        if not nextFrontier:
            result.halted = True
            break

    return result
