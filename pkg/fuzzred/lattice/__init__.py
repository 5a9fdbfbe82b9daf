# fuzzred/lattice/__init__.py
from __future__ import annotations

from .structures import Degree, Lattice, Structure, asValue, parseLattice, residuum, tnorm
from .approx import (
    eqEps,
    joinEps,
    leqEps,
    meetEps,
    residuumEps,
    squaringStepBound,
    squaringSteps,
    tnormEps,
    truncate,
)

__all__ = [
    "Degree",
    "Lattice",
    "Structure",
    "asValue",
    "parseLattice",
    "tnorm",
    "residuum",
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
