# tests/fuzzred/automata.py
"""Automata shared by the test modules, plus small construction helpers."""
from __future__ import annotations

import itertools
from pathlib import Path

import numpy as np

from fuzzred.automaton import Ffa
from fuzzred.lattice import Lattice, Structure
from fuzzred.reduction import ReductionConfig

FIXTURES = Path(__file__).with_name("fixtures")

# ----------------------------------------
# Automata used throughout the suite
# ----------------------------------------

IN1_INITIAL = [1, 0, 0, 1, 0, 0, 0]
IN1_FINAL = [0, 0, 0.5, 0, 0, 0, 0.5]
IN1_DELTA = [
    [0, 0.6, 0, 0, 0, 0, 0],
    [0, 0, 0.8, 0, 0, 0, 0],
    [0.4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0.5, 0, 0, 0, 0.4, 0],
    [0, 0, 0.7, 0, 0, 0, 0.8],
    [0, 0, 0, 0, 0.4, 0, 0],
]

IN5_SIGMA = [
    [0.2, 0.5, 0.3, 0.1, 0, 0.3, 0, 0],
    [0.2, 0.4, 0.5, 0, 0.3, 0.4, 0, 0],
    [0.5, 0.2, 0.3, 0.4, 0, 0.2, 0, 0.2],
    [0.3, 0, 0.5, 0.3, 0.4, 0.1, 0, 0.4],
    [0, 0.1, 0, 0.5, 0.2, 0, 0.4, 0.2],
    [0.4, 0.2, 0.1, 0.3, 0, 0.3, 0.2, 0.4],
    [0, 0, 0, 0, 0.2, 0.4, 0.5, 0],
    [0, 0, 0.1, 0.3, 0.2, 0.5, 0, 0.3],
]
IN5_RHO = [
    [0.3, 0.2, 0.4, 0.2, 0, 0.3, 0, 0],
    [0.5, 0.1, 0.4, 0, 0.3, 0.4, 0, 0],
    [0.2, 0.4, 0.2, 0.5, 0, 0.1, 0.4, 0.3],
    [0.3, 0, 0.2, 0.3, 0.1, 0.4, 0, 0.5],
    [0, 0.4, 0, 0.2, 0.4, 0.1, 0.3, 0.4],
    [0.1, 0.4, 0.2, 0.5, 0.3, 0.3, 0, 0.2],
    [0, 0, 0.2, 0, 0.1, 0, 0.5, 0],
    [0, 0, 0.4, 0.5, 0.1, 0.2, 0, 0.3],
]

IN6_SIGMA = [
    [0.9, 0.7, 0.6, 0.8, 0, 0.6, 0, 0],
    [0.7, 0.9, 0.8, 0, 0.7, 0.8, 0, 0],
    [0.8, 0.7, 0.9, 0.6, 0, 0.7, 0, 0.8],
    [0.7, 0, 0.8, 0.9, 0.7, 0.6, 0, 0.8],
    [0, 0.6, 0, 0.8, 0.9, 0, 0.7, 0.8],
    [0.6, 0.6, 0.8, 0.7, 0, 0.9, 0.8, 0.7],
    [0, 0, 0, 0, 0.6, 0.7, 0.9, 0],
    [0, 0, 0.6, 0.7, 0.8, 0.9, 0, 0.9],
]
IN6_RHO = [
    [0.9, 0.6, 0.7, 0.7, 0, 0.8, 0, 0],
    [0.8, 0.9, 0.7, 0, 0.6, 0.8, 0, 0],
    [0.7, 0.8, 0.9, 0.8, 0, 0.6, 0.7, 0.8],
    [0.8, 0, 0.6, 0.9, 0.7, 0.8, 0, 0.7],
    [0, 0.7, 0, 0.6, 0.9, 0.7, 0.6, 0.8],
    [0.6, 0.8, 0.7, 0.8, 0.6, 0.9, 0, 0.7],
    [0, 0, 0.6, 0, 0.6, 0, 0.9, 0],
    [0, 0, 0.7, 0.8, 0.6, 0.7, 0, 0.9],
]

# Greatest right invariances of in1 over the product structure
Z_01 = [
    [1, 0.25, 0.2, 0.5, 1, 0.25, 0.2],
    [5 / 12, 1, 0.2, 0.5, 0.5, 1, 0.2],
    [5 / 12, 0.25, 1, 0.5, 0.5, 0.25, 1],
    [5 / 12, 0.25, 0.2, 1, 0.5, 0.25, 0.2],
    [5 / 6, 0.25, 0.2, 0.5, 1, 0.25, 0.2],
    [5 / 12, 1, 0.2, 0.5, 0.5, 1, 0.2],
    [5 / 12, 0.25, 1, 0.5, 0.5, 0.25, 1],
]
Z_02 = [
    [1, 0.5, 0.4, 1, 1, 0.5, 0.4],
    [5 / 6, 1, 0.4, 1, 1, 1, 0.4],
    [5 / 6, 0.5, 1, 1, 1, 0.5, 1],
    [5 / 6, 0.5, 0.4, 1, 1, 0.5, 0.4],
    [5 / 6, 0.5, 0.4, 1, 1, 0.5, 0.4],
    [5 / 6, 1, 0.4, 1, 1, 1, 0.4],
    [5 / 6, 0.5, 1, 1, 1, 0.5, 1],
]
# eps = 0, words up to length 3
Z_03 = [
    [1, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, 0.48, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0],
    [5 / 6, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1, 0],
    [0, 0, 5 / 6, 0.4, 0, 0, 1],
]


def buildIn1() -> Ffa:
    return Ffa.build(IN1_INITIAL, [IN1_DELTA], IN1_FINAL, alphabet=["a"])



def buildIn2() -> Ffa:
    delta = np.array(IN1_DELTA, dtype=np.float64)
    delta[0, 0] = delta[4, 4] = 0.9
    return Ffa.build(IN1_INITIAL, [delta], IN1_FINAL, alphabet=["a"])



def buildIn3() -> Ffa:
    """Four chained copies of in1: copies 0 and 2 run on symbol 0, copies 1 and 3 on symbol 1."""
    n = 28
    delta = np.zeros((2, n, n))
    base = np.array(IN1_DELTA, dtype=np.float64)
    for copy in range(4):
        offset = 7 * copy
        delta[copy % 2, offset:offset + 7, offset:offset + 7] = base
    for copy in range(3):
        src, dst = 7 * copy, 7 * (copy + 1)
        delta[copy % 2, src + 2, dst + 0] = 0.5
        delta[copy % 2, src + 6, dst + 3] = 0.5
    initial = np.zeros(n)
    initial[[0, 3]] = 1.0
    final = np.zeros(n)
    final[[21 + 2, 21 + 6]] = 0.5
    return Ffa.build(initial, list(delta), final)



def buildIn5() -> Ffa:
    return Ffa.build([0.3, 0.2, 0, 0, 0, 0, 0, 0], [IN5_SIGMA, IN5_RHO], [0, 0, 0, 0.4, 0.3, 0.1, 0, 0])



def buildIn6() -> Ffa:
    return Ffa.build([1, 1, 0, 0, 0, 0, 0, 0], [IN6_SIGMA, IN6_RHO], [0, 0, 0, 0, 1, 1, 0, 0])



def buildIn7() -> Ffa:
    sigma = 0.5 * np.eye(8)
    rho = np.zeros((8, 8))
    for q in range(8):
        rho[q, 7 - q] = 0.5
    return Ffa.build([0.5, 0.5, 0, 0, 0, 0, 0, 0], [sigma, rho], [0, 0, 0, 0, 0, 0, 0.5, 0.5])



def reductionConfig(eps: float, k: int | None = None, structure: str = "P", **extra) -> ReductionConfig:
    return ReductionConfig(eps=eps, k=k, lattice=Lattice(Structure(structure)), **extra)






def matchesUpToPermutation(
    a: Ffa,
    initial: list[float],
    delta: list[list[list[float]]],
    final: list[float],
    atol: float = 1e-9,
) -> bool:
    """True if some renumbering of a's states gives exactly the expected vectors and matrices."""
    expectedInitial = np.asarray(initial, dtype=np.float64)
    expectedFinal = np.asarray(final, dtype=np.float64)
    expectedDelta = [np.asarray(mat, dtype=np.float64) for mat in delta]
    if a.n != expectedInitial.shape[0] or a.s != len(expectedDelta):
        return False
    for order in itertools.permutations(range(a.n)):
        index = np.array(order, dtype=np.intp)
        if not np.allclose(a.initial[index], expectedInitial, atol=atol, rtol=0):
            continue
        if not np.allclose(a.final[index], expectedFinal, atol=atol, rtol=0):
            continue
        if all(
            np.allclose(mat[np.ix_(index, index)], want, atol=atol, rtol=0)
            for mat, want in zip(a.delta, expectedDelta)
        ):
            return True
    return False
