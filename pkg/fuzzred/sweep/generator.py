# fuzzred/sweep/generator.py
from __future__ import annotations

import numpy as np

from fuzzred.automaton import Ffa
from fuzzred.core.errors import InfeasibleShapeError
from .models import ValueSet

__all__ = ["generateRandom"]



def _draw(rng: np.random.Generator, values: ValueSet, size: int | tuple[int, ...]) -> np.ndarray:
    """Strictly positive degrees from the value set."""
    if values.grid:
        positive = np.array([v for v in values.grid if v > 0.0])
        if positive.size == 0:
            raise InfeasibleShapeError("the value grid has no positive degree")
        return rng.choice(positive, size=size)

    drawn = rng.uniform(values.low, values.high, size=size)
    if values.decimals is None:
        floor = np.nextafter(0.0, 1.0)
    else:
        drawn = np.round(drawn, values.decimals)
        floor = 10.0 ** -values.decimals
    if values.high < floor:
        raise InfeasibleShapeError(f"interval [{values.low}, {values.high}] holds no positive degree")
    return np.clip(drawn, max(floor, values.low), values.high)



def _sparsify(rng: np.random.Generator, values: ValueSet, shape: tuple[int, ...], density: float) -> np.ndarray:
    arr = _draw(rng, values, shape)
    arr[rng.random(shape) >= density] = 0.0
    return arr



def _ensureNonzero(rng: np.random.Generator, values: ValueSet, row: np.ndarray) -> None:
    if not np.any(row > 0.0):
        row[rng.integers(row.shape[0])] = _draw(rng, values, 1)[0]



def generateRandom(n: int, s: int, density: float, values: ValueSet | None = None, seed: int = 0) -> Ffa:
    """
    Random automaton with n states and s symbols, reproducible from `seed`.

    Each entry is nonzero with probability `density`. Afterwards every row of
    every transition matrix, the initial vector and the final vector each get
    at least one nonzero entry.

    Raises:
        InfeasibleShapeError: n or s below 1, density outside (0,1], or no positive degree to draw
    """
    if n < 1 or s < 1:
        raise InfeasibleShapeError(f"cannot generate an automaton with {n} states and {s} symbols")
    if not 0.0 < density <= 1.0:
        raise InfeasibleShapeError(f"density must lie in (0,1], got {density}")
    values = values or ValueSet()
    rng = np.random.default_rng(seed)

    delta = _sparsify(rng, values, (s, n, n), density)
    for mat in delta:
        for row in mat:
            _ensureNonzero(rng, values, row)
    initial = _sparsify(rng, values, (n,), density)
    _ensureNonzero(rng, values, initial)
    final = _sparsify(rng, values, (n,), density)
    _ensureNonzero(rng, values, final)
    return Ffa.build(initial, list(delta), final)
