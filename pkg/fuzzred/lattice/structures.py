# fuzzred/lattice/structures.py
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TypeAlias

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fuzzred.core.errors import ValueRangeError

__all__ = [
    "Structure",
    "Lattice",
    "Degree",
    "asValue",
    "parseLattice",
    "tnorm",
    "residuum",
]

# A single degree or an array of degrees; operations broadcast like numpy ufuncs.
Degree: TypeAlias = float | NDArray[np.float64]



class Structure(str, Enum):
    """Linear complete residuated lattices on [0,1], tagged by their one-letter code."""
    PRODUCT = "P"
    HAMACHER = "H"
    GODEL = "G"
    LUKASIEWICZ = "L"
    NILPOTENT = "N"

    @property
    def displayName(self) -> str:
        return _TITLES[self]


_TITLES = {
    Structure.PRODUCT: "product",
    Structure.HAMACHER: "Hamacher",
    Structure.GODEL: "Gödel",
    Structure.LUKASIEWICZ: "Łukasiewicz",
    Structure.NILPOTENT: "nilpotent minimum",
}



def asValue(raw: object, *, what: str = "value") -> float:
    """
    Validates a degree. Accepts ints, floats and numeric strings.

    Raises:
        ValueRangeError: NaN, infinities, or anything outside [0,1]
    """
    try:
        value = float(raw) # type: ignore[arg-type]
    except (TypeError, ValueError) as err:
        raise ValueRangeError(f"{what} must be a number in [0,1], got {raw!r}") from err
    if math.isnan(value) or value < 0.0 or value > 1.0:
        raise ValueRangeError(f"{what} must lie in [0,1], got {raw!r}")
    return value



def _unwrap(result: NDArray[np.float64]) -> Degree:
    return float(result) if result.ndim == 0 else result



@dataclass(frozen=True)
class Lattice:
    """
    A residuated lattice on [0,1]: a t-norm ⊗ and its residuum →.

    `hamacherLambda` selects a member of the Hamacher family (λ ≥ 0); λ = 0 is the
    classic Hamacher product. It is ignored by the other structures.

    Both operations accept scalars or numpy arrays and broadcast; scalar inputs
    return a Python float.
    """
    structure: Structure = Structure.PRODUCT
    hamacherLambda: float = 0.0

    def __post_init__(self) -> None:
        lam = float(self.hamacherLambda)
        if math.isnan(lam) or math.isinf(lam) or lam < 0.0:
            raise ValueRangeError(f"Hamacher lambda must be a finite number >= 0, got {self.hamacherLambda!r}")
        object.__setattr__(self, "structure", Structure(self.structure))
        object.__setattr__(self, "hamacherLambda", lam)

    def __str__(self) -> str:
        if self.structure is Structure.HAMACHER and self.hamacherLambda != 0.0:
            return f"{self.structure.value}(lambda={self.hamacherLambda:g})"
        return self.structure.value

    def tnorm(self, x: ArrayLike, y: ArrayLike) -> Degree:
        a, b = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
        match self.structure:
            case Structure.PRODUCT:
                out = a * b
            case Structure.HAMACHER:
                lam = self.hamacherLambda
                den = lam + (1.0 - lam) * (a + b - a * b)
                # den vanishes only for lambda = 0 and x = y = 0, where the t-norm is 0
                out = np.divide(a * b, den, out=np.zeros(a.shape), where=den > 0.0)
            case Structure.GODEL:
                out = np.minimum(a, b)
            case Structure.LUKASIEWICZ:
                out = np.maximum(0.0, a + b - 1.0)
            case Structure.NILPOTENT:
                out = np.where(a + b > 1.0, np.minimum(a, b), 0.0)
            case _:
                raise AssertionError(f"unhandled structure {self.structure!r}")
        return _unwrap(np.asarray(out, dtype=np.float64))

    def residuum(self, x: ArrayLike, y: ArrayLike) -> Degree:
        a, b = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
        below = a <= b
        match self.structure:
            case Structure.PRODUCT:
                # x > y >= 0 wherever the quotient is taken
                out = np.divide(b, a, out=np.ones(a.shape), where=~below)
            case Structure.HAMACHER:
                lam = self.hamacherLambda
                num = b * (lam + (1.0 - lam) * a)
                den = a - b * (1.0 - lam) * (1.0 - a)
                quotient = np.divide(num, den, out=np.ones(a.shape), where=~below)
                out = np.minimum(1.0, quotient)
            case Structure.GODEL:
                out = np.where(below, 1.0, b)
            case Structure.LUKASIEWICZ:
                out = np.minimum(1.0, 1.0 - a + b)
            case Structure.NILPOTENT:
                out = np.where(below, 1.0, np.maximum(1.0 - a, b))
            case _:
                raise AssertionError(f"unhandled structure {self.structure!r}")
        return _unwrap(np.asarray(out, dtype=np.float64))

    @property
    def isLocallyFinite(self) -> bool:
        """True for the structures whose ⊗-generated submonoids are always finite."""
        return self.structure in (Structure.GODEL, Structure.LUKASIEWICZ, Structure.NILPOTENT)



def parseLattice(code: str, hamacherLambda: float = 0.0) -> Lattice:
    """
    Builds a Lattice from its one-letter code (P, H, G, L, N; case-insensitive).

    Raises:
        ValueRangeError: unknown code or negative lambda
    """
    try:
        structure = Structure(str(code).strip().upper())
    except ValueError as err:
        known = ", ".join(member.value for member in Structure)
        raise ValueRangeError(f"unknown structure {code!r}; expected one of {known}") from err
    return Lattice(structure, hamacherLambda if structure is Structure.HAMACHER else 0.0)



def tnorm(lat: Lattice, x: ArrayLike, y: ArrayLike) -> Degree:
    return lat.tnorm(x, y)



def residuum(lat: Lattice, x: ArrayLike, y: ArrayLike) -> Degree:
    return lat.residuum(x, y)
