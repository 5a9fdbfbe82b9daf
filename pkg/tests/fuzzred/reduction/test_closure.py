# tests/fuzzred/reduction/test_closure.py
from __future__ import annotations

import numpy as np
import pytest

from fuzzred.automaton import Ffa, backward
from fuzzred.core.errors import ClosureCapError, DimensionError
from fuzzred.fuzzy import truncateVec
from fuzzred.lattice import Lattice
from fuzzred.reduction import ClosureSet, closure, greatestRightInvariance, stabilizationDepth
from fuzzred.sweep import ValueSet, generateRandom
from tests.fuzzred.automata import reductionConfig


def test_closure_in1HaltsAfterFiveRounds(in1: Ffa, product: Lattice) -> None:
    result = closure(in1, reductionConfig(0.1))
    assert len(result) == 5
    assert result.steps == 5
    assert result.halted
    assert result.stabilizationDepth == 4
    for length, vec in enumerate(result.vectors[:4]):
        assert np.allclose(vec, truncateVec(backward(in1, (0,) * length, product), 0.1))
    assert np.allclose(result.vectors[4], 0.1)


def test_closure_zeroRoundsKeepsOnlyFinal(in1: Ffa) -> None:
    result = closure(in1, reductionConfig(0.0, k=0))
    assert len(result) == 1
    assert result.steps == 0
    assert not result.halted
    assert result.stabilizationDepth is None


def test_closure_boundedRoundsAtZeroEps(in1: Ffa) -> None:
    result = closure(in1, reductionConfig(0.0, k=3))
    assert len(result) == 4
    assert result.steps == 3
    assert result.rounds == 3
    assert not result.halted


def test_closure_countsEveryVectorSymbolPair(in5: Ffa) -> None:
    result = closure(in5, reductionConfig(0.3))
    # once halted, every vector has been expanded once per symbol
    assert result.steps == 2 * len(result)
    assert result.halted


def test_closure_capRaises(in1: Ffa) -> None:
    with pytest.raises(ClosureCapError) as info:
        closure(in1, reductionConfig(0.1, maxClosure=2))
    assert info.value.cap == 2
    assert info.value.exitCode == 2


def test_closure_rejectsEmptyAutomaton() -> None:
    with pytest.raises(DimensionError):
        closure(Ffa.build([], [np.zeros((0, 0))], []), reductionConfig(0.1))


def test_closureSet_insertDeduplicatesWithinPrecision() -> None:
    vectors = ClosureSet()
    assert vectors.insert(np.array([0.5, 0.25]), 1e-9) == 0
    assert vectors.insert(np.array([0.5 + 1e-12, 0.25]), 1e-9) is None
    assert vectors.insert(np.array([0.5, 0.3]), 1e-9) == 1
    assert len(vectors) == 2


def test_stabilizationDepth(in1: Ffa) -> None:
    assert stabilizationDepth(in1, reductionConfig(0.1)) == 4
    assert stabilizationDepth(in1, reductionConfig(0.1, k=2)) is None
    crisp = Ffa.build([1, 0], [[[0, 1], [1, 0]]], [0, 1])
    assert stabilizationDepth(crisp, reductionConfig(0.0)) == 1


# ----------------------------------------
# Stabilization on random automata
# ----------------------------------------

STABILIZING_VALUES = [
    ValueSet(grid=(0.25, 0.5, 0.75, 1.0)),
    ValueSet(grid=(0.2, 0.4, 0.6, 0.8, 1.0)),
    ValueSet(grid=(0.5, 1.0)),
]


@pytest.mark.parametrize("seed", range(50))
def test_stabilizationDepth_reproducesUnboundedInvariance(seed: int) -> None:
    rng = np.random.default_rng(seed)
    eps = float(rng.choice([0.05, 0.1, 0.2]))
    n, s = int(rng.integers(1, 9)), int(rng.integers(1, 3))
    density = float(rng.choice([0.3, 0.5, 0.8]))
    a = generateRandom(n, s, density, STABILIZING_VALUES[seed % len(STABILIZING_VALUES)], seed=seed)

    unbounded = reductionConfig(eps)
    full = closure(a, unbounded)
    assert full.halted
    depth = full.stabilizationDepth
    assert depth == full.rounds - 1
    assert stabilizationDepth(a, unbounded) == depth

    bounded = reductionConfig(eps, k=depth)
    cut = closure(a, bounded)
    assert len(cut) == len(full)
    assert np.array_equal(greatestRightInvariance(cut, bounded), greatestRightInvariance(full, unbounded))
    if depth > 0:
        shallower = reductionConfig(eps, k=depth - 1)
        assert len(closure(a, shallower)) < len(full)
