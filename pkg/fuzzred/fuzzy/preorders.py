# fuzzred/fuzzy/preorders.py
from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from fuzzred.lattice import Lattice
from .compose import composeEpsMm
from .sets import isReflexive, leqEpsMat, truncateMat

__all__ = ["isEpsTransitive", "isEpsFpo"]



def isEpsTransitive(z: ArrayLike, eps: float, lat: Lattice, tol: float = 0.0) -> bool:
    """Z ∘ε Z ≤ε Z."""
    arr = np.asarray(z, dtype=np.float64)
    return leqEpsMat(composeEpsMm(arr, arr, eps, lat), arr, eps, tol)



def isEpsFpo(z: ArrayLike, eps: float, lat: Lattice, tol: float = 0.0) -> bool:
    """
    ε-fuzzy pre-order: reflexive, ε-transitive and fixed by ε-truncation.

    `tol` is an absolute slack on every comparison; relations assembled from
    residuals of different vectors can miss exact transitivity by a few ulps.
    """
    arr = np.asarray(z, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        return False
    if not isReflexive(arr, tol):
        return False
    if not np.all(np.abs(truncateMat(arr, eps) - arr) <= tol):
        return False
    return isEpsTransitive(arr, eps, lat, tol)
