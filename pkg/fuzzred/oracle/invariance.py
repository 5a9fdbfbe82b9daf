# fuzzred/oracle/invariance.py
from __future__ import annotations

import logging

import numpy as np
from numpy.typing import ArrayLike

from fuzzred.automaton import Ffa
from fuzzred.config.settings import config
from fuzzred.core.errors import DimensionError, EnumerationBudgetError
from fuzzred.fuzzy import composeMv, composeVm, eqEpsVec, isReflexive, rightResidualEps, truncateVec
from fuzzred.lattice import Lattice
from .enumeration import backwardVectors, checkBudget, forwardVectors

logger = logging.getLogger(__name__)

__all__ = ["verifyRightInvariance", "verifyLeftInvariance", "verifyGreatest"]

def _relation(a: Ffa, z: ArrayLike) -> np.ndarray:
    arr = np.asarray(z, dtype=np.float64)
    if arr.shape != (a.n, a.n):
        raise DimensionError(f"relation of shape {arr.shape} for a {a.n}-state automaton")
    return arr



def _slack(tol: float | None) -> float:
    return float(tol if tol is not None else config("oracle.tolerance", 1e-9))



def verifyRightInvariance(
    a: Ffa,
    z: ArrayLike,
    eps: float,
    k: int,
    lat: Lattice,
    *,
    tol: float | None = None,
    maxWords: int | None = None,
) -> bool:
    """Z is reflexive and Z ∘ F_w =ε F_w for every word of length ≤ k."""
    rel = _relation(a, z)
    slack = _slack(tol)
    if not isReflexive(rel, slack):
        return False
    checkBudget(a.s, k, maxWords)
    for word, fw in backwardVectors(a, k, lat):
        if not eqEpsVec(composeMv(rel, fw, lat), fw, eps, slack):
            logger.debug("right invariance fails on word %s", word)
            return False
    return True



def verifyLeftInvariance(
    a: Ffa,
    z: ArrayLike,
    eps: float,
    k: int,
    lat: Lattice,
    *,
    tol: float | None = None,
    maxWords: int | None = None,
) -> bool:
    """Z is reflexive and I_w ∘ Z =ε I_w for every word of length ≤ k."""
    rel = _relation(a, z)
    slack = _slack(tol)
    if not isReflexive(rel, slack):
        return False
    checkBudget(a.s, k, maxWords)
    for word, iw in forwardVectors(a, k, lat):
        if not eqEpsVec(composeVm(iw, rel, lat), iw, eps, slack):
            logger.debug("left invariance fails on word %s", word)
            return False
    return True



def _candidateGrid(a: Ffa, eps: float, k: int, lat: Lattice) -> np.ndarray:
    values = {float(eps), 1.0}
    for _, fw in backwardVectors(a, k, lat):
        f = truncateVec(fw, eps)
        values.update(np.unique(rightResidualEps(f, f, eps, lat)).tolist())
    return np.array(sorted(values), dtype=np.float64)



def _raises(entry: float, grid: np.ndarray, slack: float) -> list[float]:
    above = grid[grid > entry + slack]
    candidates = set(above.tolist())
    candidates.update(((above[:-1] + above[1:]) / 2.0).tolist())
    if above.size:
        candidates.add((entry + float(above[0])) / 2.0)
    return sorted(candidates)



def verifyGreatest(
    a: Ffa,
    z: ArrayLike,
    eps: float,
    k: int,
    lat: Lattice,
    *,
    tol: float | None = None,
    maxWords: int | None = None,
    maxStates: int | None = None,
) -> bool:
    """
    Z is a right (ε,k)-invariance and no single entry of it can be raised.

    Right invariances are closed downward among reflexive relations, so any
    strictly larger invariance contains Z with one entry raised. Raised values
    come from the residual grid of the truncated backward vectors (plus ε and 1)
    and the midpoints between neighbouring candidates.

    Raises:
        EnumerationBudgetError: more than `oracle.greatestMaxStates` states, or too many words
    """
    limit = int(maxStates if maxStates is not None else config("oracle.greatestMaxStates", 8))
    if a.n > limit:
        raise EnumerationBudgetError(f"greatest-invariance search is limited to {limit} states, got {a.n}")
    rel = _relation(a, z)
    slack = _slack(tol)
    if not verifyRightInvariance(a, rel, eps, k, lat, tol=slack, maxWords=maxWords):
        return False

    grid = _candidateGrid(a, eps, k, lat)
    for i in range(a.n):
        for j in range(a.n):
            if i == j:
                continue
            for value in _raises(float(rel[i, j]), grid, slack):
                raised = rel.copy()
                raised[i, j] = value
                if verifyRightInvariance(a, raised, eps, k, lat, tol=slack, maxWords=maxWords):
                    logger.debug("entry (%d,%d) can be raised from %r to %r", i, j, float(rel[i, j]), value)
                    return False
    return True
