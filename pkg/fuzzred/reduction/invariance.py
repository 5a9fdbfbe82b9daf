# fuzzred/reduction/invariance.py
from __future__ import annotations

import numpy as np

from fuzzred.automaton import Ffa, reverse
from fuzzred.core.errors import DimensionError
from fuzzred.fuzzy import FuzzyMat, asFuzzyMat, rightResidualEps, truncateMat
from .closure import ClosureSet, closure
from .models import ReductionConfig

__all__ = ["greatestRightInvariance", "greatestLeftInvariance", "stabilizationDepth"]



def greatestRightInvariance(vectors: ClosureSet, cfg: ReductionConfig) -> FuzzyMat:
    """
    Z = ⋀ε { f /ε f : f ∈ 𝓕 }.

    The result is an ε-FPO. It is the greatest right (ε,k)-invariance of the
    automaton the closure was built from, and the greatest right ε-invariance
    when the closure halted on an empty frontier.
    """
    if len(vectors) == 0:
        raise DimensionError("cannot build an invariance from an empty closure")
    z: FuzzyMat | None = None
    for f in vectors.vectors:
        residual = rightResidualEps(f, f, cfg.eps, cfg.lattice)
        z = residual if z is None else np.minimum(z, residual)
    return asFuzzyMat(truncateMat(z, cfg.eps), what="invariance")



def greatestLeftInvariance(a: Ffa, cfg: ReductionConfig) -> FuzzyMat:
    """Greatest left (ε,k)-invariance of `a`: the converse of the greatest right one of its reverse."""
    return asFuzzyMat(greatestRightInvariance(closure(reverse(a), cfg), cfg).T, what="invariance")



def stabilizationDepth(a: Ffa, cfg: ReductionConfig) -> int | None:
    """
    Smallest k at which the truncated backward vectors of words of length ≤ k
    already cover those of every word, or None if the closure was cut off by
    `cfg.k` before its frontier emptied.
    """
    return closure(a, cfg).stabilizationDepth
