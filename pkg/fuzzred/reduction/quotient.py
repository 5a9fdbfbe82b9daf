# fuzzred/reduction/quotient.py
from __future__ import annotations

import logging

import numpy as np
from numpy.typing import ArrayLike

from fuzzred.automaton import Ffa
from fuzzred.core.errors import DimensionError, NotAnEpsFpoError
from fuzzred.fuzzy import asFuzzyMat, composeEpsMm, composeEpsMv, composeEpsVm, isEpsFpo, quantizedKey
from .models import ReductionConfig

logger = logging.getLogger(__name__)

__all__ = ["aftersetRepresentatives", "afterSetAutomaton"]



def aftersetRepresentatives(z: ArrayLike, precision: float) -> tuple[int, ...]:
    """Smallest state index of every afterset class, ascending."""
    reps: dict[bytes, int] = {}
    for q, row in enumerate(np.asarray(z, dtype=np.float64)):
        reps.setdefault(quantizedKey(row, precision), q)
    return tuple(sorted(reps.values()))



def afterSetAutomaton(a: Ffa, z: ArrayLike, cfg: ReductionConfig) -> tuple[Ffa, tuple[int, ...]]:
    """
    The (Z,ε)-afterset automaton of `a`.

    One state per distinct afterset Z_q, labeled by the smallest q having it and
    renumbered 0..d−1 in that order:

      - I′(q) = I ∘ε Z^q
      - δ′σ(q,p) = Z_q ∘ε δσ ∘ε Z^p
      - F′(q) = Z_q ∘ε F

    Returns the quotient and the representative indices.

    Raises:
        DimensionError: Z does not match the automaton
        NotAnEpsFpoError: Z is not an ε-FPO (within `cfg.precision`)
    """
    relation = asFuzzyMat(z, what="relation")
    if relation.shape[0] != a.n:
        raise DimensionError(f"relation is {relation.shape[0]}x{relation.shape[0]} for a {a.n}-state automaton")
    if not isEpsFpo(relation, cfg.eps, cfg.lattice, tol=cfg.precision):
        raise NotAnEpsFpoError(f"relation is not an ε-FPO for eps={cfg.eps:g} over {cfg.lattice}")

    reps = aftersetRepresentatives(relation, cfg.precision)
    index = np.array(reps, dtype=np.intp)
    rows = relation[index, :]
    cols = relation[:, index]
    eps, lat = cfg.eps, cfg.lattice

    quotient = Ffa(
        initial=composeEpsVm(a.initial, cols, eps, lat),
        delta=tuple(composeEpsMm(composeEpsMm(rows, mat, eps, lat), cols, eps, lat) for mat in a.delta),
        final=composeEpsMv(rows, a.final, eps, lat),
        alphabet=a.alphabet,
    )
    logger.debug("afterset automaton: %d -> %d states, representatives %s", a.n, quotient.n, list(reps))
    return quotient, reps
