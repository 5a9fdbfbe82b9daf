# fuzzred/fuzzy/sets.py
from __future__ import annotations

from typing import TypeAlias

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fuzzred.core.errors import DimensionError, ValueRangeError
from fuzzred.lattice import leqEps

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
]

# Fuzzy subset of a finite state set: 1-D float64 array of degrees.
FuzzyVec: TypeAlias = NDArray[np.float64]
# Fuzzy relation on a finite state set: square 2-D float64 array of degrees.
FuzzyMat: TypeAlias = NDArray[np.float64]



def _toArray(values: ArrayLike, what: str) -> NDArray[np.float64]:
    try:
        return np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as err:
        raise DimensionError(f"{what} is not a rectangular array of numbers: {err}") from err



def _checkRange(arr: NDArray[np.float64], what: str) -> None:
    if arr.size and (np.isnan(arr).any() or arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueRangeError(f"{what} has entries outside [0,1]")



def asFuzzyVec(values: ArrayLike, n: int | None = None, *, what: str = "vector") -> FuzzyVec:
    """
    Validated, read-only float64 copy of `values`.

    Raises:
        DimensionError: not 1-D, or length differs from `n`
        ValueRangeError: entries outside [0,1]
    """
    arr = _toArray(values, what)
    if arr.ndim != 1:
        raise DimensionError(f"{what} must be one-dimensional, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise DimensionError(f"{what} has length {arr.shape[0]}, expected {n}")
    _checkRange(arr, what)
    arr.setflags(write=False)
    return arr



def asFuzzyMat(values: ArrayLike, n: int | None = None, *, what: str = "matrix") -> FuzzyMat:
    """
    Validated, read-only square float64 copy of `values`.

    An empty sequence is accepted as the 0×0 relation.
    """
    arr = _toArray(values, what)
    if arr.size == 0:
        arr = arr.reshape(0, 0)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise DimensionError(f"{what} is {arr.shape[0]}x{arr.shape[0]}, expected {n}x{n}")
    _checkRange(arr, what)
    arr.setflags(write=False)
    return arr



def identity(n: int) -> FuzzyMat:
    return asFuzzyMat(np.eye(n))



def truncateVec(f: ArrayLike, eps: float) -> FuzzyVec:
    arr = np.asarray(f, dtype=np.float64)
    return np.where(arr > eps, arr, eps)



def truncateMat(r: ArrayLike, eps: float) -> FuzzyMat:
    arr = np.asarray(r, dtype=np.float64)
    return np.where(arr > eps, arr, eps)



def _sameShape(a: NDArray[np.float64], b: NDArray[np.float64]) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")



def leqEpsVec(f: ArrayLike, g: ArrayLike, eps: float, tol: float = 0.0) -> bool:
    a, b = np.asarray(f, dtype=np.float64), np.asarray(g, dtype=np.float64)
    _sameShape(a, b)
    return bool(np.all(leqEps(a, b, eps, tol)))



def eqEpsVec(f: ArrayLike, g: ArrayLike, eps: float, tol: float = 0.0) -> bool:
    return leqEpsVec(f, g, eps, tol) and leqEpsVec(g, f, eps, tol)



def leqEpsMat(r: ArrayLike, s: ArrayLike, eps: float, tol: float = 0.0) -> bool:
    return leqEpsVec(r, s, eps, tol)



def eqEpsMat(r: ArrayLike, s: ArrayLike, eps: float, tol: float = 0.0) -> bool:
    return leqEpsMat(r, s, eps, tol) and leqEpsMat(s, r, eps, tol)



def isReflexive(z: ArrayLike, tol: float = 0.0) -> bool:
    arr = np.asarray(z, dtype=np.float64)
    return bool(np.all(np.diagonal(arr) >= 1.0 - tol))



def afterset(z: FuzzyMat, q: int) -> FuzzyVec:
    """Row q of the relation."""
    return np.asarray(z)[q, :]



def foreset(z: FuzzyMat, q: int) -> FuzzyVec:
    """Column q of the relation."""
    return np.asarray(z)[:, q]



def quantizedKey(values: ArrayLike, precision: float) -> bytes:
    """
    Hashable key equal for arrays whose entries round to the same multiples of `precision`.
    """
    arr = np.asarray(values, dtype=np.float64)
    return np.rint(arr / precision).astype(np.int64).tobytes()
