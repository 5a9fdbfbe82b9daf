# fuzzred/lattice/approx.py
from __future__ import annotations

import math
from collections.abc import Iterable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fuzzred.core.errors import ValueRangeError
from .structures import Degree, Lattice, Structure, _unwrap

__all__ = [
    "leqEps",
    "eqEps",
    "tnormEps",
    "residuumEps",
    "meetEps",
    "joinEps",
    "truncate",
    "squaringSteps",
    "squaringStepBound",
]

# Scalar-or-array boolean result of the ε-relations.
Verdict = bool | NDArray[np.bool_]



def _verdict(result: NDArray[np.bool_]) -> Verdict:
    return bool(result) if result.ndim == 0 else result



def leqEps(x: ArrayLike, y: ArrayLike, eps: float, tol: float = 0.0) -> Verdict:
    """x ≤ε y: x ≤ y or x ≤ ε. `tol` widens both comparisons by an absolute slack."""
    a = np.asarray(x, dtype=np.float64)
    b = np.asarray(y, dtype=np.float64)
    return _verdict((a <= b + tol) | (a <= eps + tol))



def eqEps(x: ArrayLike, y: ArrayLike, eps: float, tol: float = 0.0) -> Verdict:
    """x =ε y: equal, or both at most ε (up to `tol`)."""
    return _verdict(np.asarray(leqEps(x, y, eps, tol)) & np.asarray(leqEps(y, x, eps, tol)))



def truncate(x: ArrayLike, eps: float) -> Degree:
    """ε-truncation: values not above ε are raised to ε."""
    a = np.asarray(x, dtype=np.float64)
    return _unwrap(np.where(a > eps, a, eps))



def tnormEps(lat: Lattice, x: ArrayLike, y: ArrayLike, eps: float) -> Degree:
    """x ⊗ε y: the t-norm when it exceeds ε, ε otherwise."""
    return truncate(lat.tnorm(x, y), eps)



def residuumEps(lat: Lattice, x: ArrayLike, y: ArrayLike, eps: float) -> Degree:
    """x →ε y = (x ∨ ε) → (y ∨ ε)."""
    a = np.maximum(np.asarray(x, dtype=np.float64), eps)
    b = np.maximum(np.asarray(y, dtype=np.float64), eps)
    return lat.residuum(a, b)



def meetEps(values: Iterable[float], eps: float) -> float:
    """Approximate infimum; the empty meet is 1 (then clamped like any other)."""
    low = min((float(v) for v in values), default=1.0)
    return low if low > eps else float(eps)



def joinEps(values: Iterable[float], eps: float) -> float:
    """Approximate supremum ⋁(A ∪ {ε}); the empty join is ε."""
    return max([float(eps), *(float(v) for v in values)])



def squaringSteps(lat: Lattice, x: float, eps: float, *, maxSteps: int = 100_000) -> int:
    """
    Counts iterations of x ↦ truncate(x ⊗ x, ε) until the value settles at ε.

    Returns 0 when x is already at most ε. Raises ValueRangeError when the
    iteration does not reach ε within `maxSteps` (x = 1, or ε = 0 on a strict t-norm).
    """
    current = truncate(float(x), eps)
    steps = 0
    while current > eps:
        if steps >= maxSteps:
            raise ValueRangeError(f"squaring from {x} did not reach eps={eps} within {maxSteps} steps")
        current = float(tnormEps(lat, current, current, eps))
        steps += 1
    return steps



def squaringStepBound(lat: Lattice, x: float, eps: float) -> int:
    """
    Upper bound on squaringSteps for the product and Hamacher(0) structures.

    Each squaring shrinks a value v ≤ x by at least the factor c, with c = x for
    the product and c = 1/(2 − x) for Hamacher, so ⌈log_c(ε/x)⌉ + 2 steps suffice.

    Raises:
        ValueRangeError: ε outside (0,1), x outside (0,1), or another structure
    """
    if not 0.0 < eps < 1.0:
        raise ValueRangeError(f"eps must lie in (0,1) for the squaring bound, got {eps}")
    if not 0.0 < x < 1.0:
        raise ValueRangeError(f"x must lie in (0,1) for the squaring bound, got {x}")
    if x <= eps:
        return 0
    if lat.structure is Structure.PRODUCT:
        factor = x
    elif lat.structure is Structure.HAMACHER and lat.hamacherLambda == 0.0:
        factor = 1.0 / (2.0 - x)
    else:
        raise ValueRangeError(f"no squaring bound for structure {lat}")
    return math.ceil(math.log(eps / x) / math.log(factor)) + 2
