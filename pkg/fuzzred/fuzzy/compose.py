# fuzzred/fuzzy/compose.py
from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fuzzred.core.errors import DimensionError
from fuzzred.lattice import Lattice, residuumEps, tnormEps
from .sets import FuzzyMat, FuzzyVec

__all__ = [
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
]

# Sup-⊗ compositions. The exact forms take the supremum with initial value 0 (empty
# supremum); the ε forms use ⊗ε and start from ε, which is ⋁ε.



def _vec(f: ArrayLike, what: str) -> NDArray[np.float64]:
    arr = np.asarray(f, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionError(f"{what} must be a vector, got shape {arr.shape}")
    return arr



def _mat(r: ArrayLike, what: str) -> NDArray[np.float64]:
    arr = np.asarray(r, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionError(f"{what} must be a matrix, got shape {arr.shape}")
    return arr



def _inner(left: int, right: int) -> None:
    if left != right:
        raise DimensionError(f"cannot compose: inner dimensions {left} and {right} differ")



def _tnorm(lat: Lattice, x: NDArray[np.float64], y: NDArray[np.float64], eps: float | None) -> NDArray[np.float64]:
    out = lat.tnorm(x, y) if eps is None else tnormEps(lat, x, y, eps)
    return np.asarray(out, dtype=np.float64)



def _vv(f: ArrayLike, g: ArrayLike, lat: Lattice, eps: float | None) -> float:
    a, b = _vec(f, "left operand"), _vec(g, "right operand")
    _inner(a.shape[0], b.shape[0])
    return float(np.max(_tnorm(lat, a, b, eps), initial=0.0 if eps is None else eps))



def _vm(f: ArrayLike, r: ArrayLike, lat: Lattice, eps: float | None) -> FuzzyVec:
    a, m = _vec(f, "left operand"), _mat(r, "right operand")
    _inner(a.shape[0], m.shape[0])
    return np.max(_tnorm(lat, a[:, None], m, eps), axis=0, initial=0.0 if eps is None else eps)



def _mv(r: ArrayLike, f: ArrayLike, lat: Lattice, eps: float | None) -> FuzzyVec:
    m, a = _mat(r, "left operand"), _vec(f, "right operand")
    _inner(m.shape[1], a.shape[0])
    return np.max(_tnorm(lat, m, a[None, :], eps), axis=1, initial=0.0 if eps is None else eps)



def _mm(r: ArrayLike, s: ArrayLike, lat: Lattice, eps: float | None) -> FuzzyMat:
    left, right = _mat(r, "left operand"), _mat(s, "right operand")
    _inner(left.shape[1], right.shape[0])
    products = _tnorm(lat, left[:, :, None], right[None, :, :], eps)
    return np.max(products, axis=1, initial=0.0 if eps is None else eps)



def composeVv(f: ArrayLike, g: ArrayLike, lat: Lattice) -> float:
    """f ∘ g = ⋁_c f(c) ⊗ g(c)."""
    return _vv(f, g, lat, None)



def composeVm(f: ArrayLike, r: ArrayLike, lat: Lattice) -> FuzzyVec:
    """(f ∘ r)(b) = ⋁_c f(c) ⊗ r(c,b)."""
    return _vm(f, r, lat, None)



def composeMv(r: ArrayLike, f: ArrayLike, lat: Lattice) -> FuzzyVec:
    """(r ∘ f)(a) = ⋁_c r(a,c) ⊗ f(c)."""
    return _mv(r, f, lat, None)



def composeMm(r: ArrayLike, s: ArrayLike, lat: Lattice) -> FuzzyMat:
    """(r ∘ s)(a,b) = ⋁_c r(a,c) ⊗ s(c,b)."""
    return _mm(r, s, lat, None)



def composeEpsVv(f: ArrayLike, g: ArrayLike, eps: float, lat: Lattice) -> float:
    return _vv(f, g, lat, eps)



def composeEpsVm(f: ArrayLike, r: ArrayLike, eps: float, lat: Lattice) -> FuzzyVec:
    return _vm(f, r, lat, eps)



def composeEpsMv(r: ArrayLike, f: ArrayLike, eps: float, lat: Lattice) -> FuzzyVec:
    return _mv(r, f, lat, eps)



def composeEpsMm(r: ArrayLike, s: ArrayLike, eps: float, lat: Lattice) -> FuzzyMat:
    return _mm(r, s, lat, eps)



def rightResidualEps(f: ArrayLike, g: ArrayLike, eps: float, lat: Lattice) -> FuzzyMat:
    """(f /ε g)(a,b) = g(b) →ε f(a)."""
    a, b = _vec(f, "f"), _vec(g, "g")
    _inner(a.shape[0], b.shape[0])
    return np.asarray(residuumEps(lat, b[None, :], a[:, None], eps), dtype=np.float64).reshape(a.shape[0], b.shape[0])



def leftResidualEps(f: ArrayLike, g: ArrayLike, eps: float, lat: Lattice) -> FuzzyMat:
    """(f \\ε g)(a,b) = f(a) →ε g(b)."""
    a, b = _vec(f, "f"), _vec(g, "g")
    _inner(a.shape[0], b.shape[0])
    return np.asarray(residuumEps(lat, a[:, None], b[None, :], eps), dtype=np.float64).reshape(a.shape[0], b.shape[0])
