# tests/fuzzred/fuzzy/test_sets.py
from __future__ import annotations

import numpy as np
import pytest

from fuzzred.core.errors import DimensionError, ValueRangeError
from fuzzred.fuzzy import (
    afterset,
    asFuzzyMat,
    asFuzzyVec,
    eqEpsMat,
    eqEpsVec,
    foreset,
    identity,
    isReflexive,
    leqEpsVec,
    quantizedKey,
    truncateMat,
    truncateVec,
)

# ----------------------------------------
# Validation
# ----------------------------------------

def test_asFuzzyVec_readOnlyCopy() -> None:
    source = [0.1, 0.5]
    vec = asFuzzyVec(source)
    assert vec.dtype == np.float64
    assert not vec.flags.writeable
    with pytest.raises(ValueError):
        vec[0] = 0.3


@pytest.mark.parametrize("bad", [[0.1, 1.2], [-0.1], [float("nan")]])
def test_asFuzzyVec_rejectsOutOfRange(bad: list[float]) -> None:
    with pytest.raises(ValueRangeError):
        asFuzzyVec(bad)


def test_asFuzzyVec_checksLength() -> None:
    with pytest.raises(DimensionError):
        asFuzzyVec([0.1, 0.2], 3)
    with pytest.raises(DimensionError):
        asFuzzyVec([[0.1]])


def test_asFuzzyMat_shapes() -> None:
    assert asFuzzyMat([]).shape == (0, 0)
    with pytest.raises(DimensionError):
        asFuzzyMat([[0.1, 0.2]])
    with pytest.raises(DimensionError):
        asFuzzyMat([[0.1, 0.2], [0.3]])
    with pytest.raises(DimensionError):
        asFuzzyMat(np.eye(2), 3)


def test_identity_isReflexive() -> None:
    assert isReflexive(identity(3))
    assert not isReflexive(np.full((2, 2), 0.5))
    assert isReflexive(np.full((2, 2), 1.0 - 1e-12), tol=1e-9)

# ----------------------------------------
# Truncation and ε-comparisons
# ----------------------------------------

def test_truncate_vectorAndMatrix() -> None:
    assert truncateVec([0.0, 0.2, 0.05], 0.1).tolist() == [0.1, 0.2, 0.1]
    assert truncateMat([[0.0, 1.0], [0.3, 0.1]], 0.1).tolist() == [[0.1, 1.0], [0.3, 0.1]]


def test_eqEpsVec_ignoresDifferencesBelowEpsilon() -> None:
    assert eqEpsVec([0.05, 0.5], [0.0, 0.5], 0.1)
    assert not eqEpsVec([0.05, 0.5], [0.0, 0.4], 0.1)
    assert leqEpsVec([0.05, 0.4], [0.0, 0.5], 0.1)
    with pytest.raises(DimensionError):
        eqEpsVec([0.1], [0.1, 0.2], 0.0)


def test_eqEpsMat_withTolerance() -> None:
    a = np.array([[1.0, 0.25], [0.5, 1.0]])
    assert eqEpsMat(a, a + 1e-13, 0.0, tol=1e-12)
    assert not eqEpsMat(a, a + 1e-13, 0.0)

# ----------------------------------------
# Aftersets and keys
# ----------------------------------------

def test_aftersetAndForeset_areRowAndColumn() -> None:
    z = np.array([[1.0, 0.2], [0.7, 1.0]])
    assert afterset(z, 0).tolist() == [1.0, 0.2]
    assert foreset(z, 0).tolist() == [1.0, 0.7]
    assert np.array_equal(afterset(z.T, 1), foreset(z, 1))


def test_quantizedKey_mergesNearbyValues() -> None:
    assert quantizedKey([0.3, 0.1 + 0.2], 1e-12) == quantizedKey([0.3, 0.3], 1e-12)
    assert quantizedKey([0.3], 1e-12) != quantizedKey([0.3 + 1e-9], 1e-12)
    assert quantizedKey([0.31], 0.1) == quantizedKey([0.29], 0.1)
