# tests/fuzzred/lattice/test_approx.py
from __future__ import annotations

import numpy as np
import pytest

from fuzzred.core.errors import ValueRangeError
from fuzzred.lattice import (
    Lattice,
    Structure,
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

P = Lattice(Structure.PRODUCT)
H = Lattice(Structure.HAMACHER)
G = Lattice(Structure.GODEL)

# ----------------------------------------
# Relations
# ----------------------------------------

def test_leqEps_belowEpsilonAlwaysHolds() -> None:
    assert leqEps(0.08, 0.0, 0.1) is True
    assert leqEps(0.3, 0.2, 0.1) is False
    assert leqEps(0.2, 0.3, 0.1) is True


def test_eqEps_bothSmallOrEqual() -> None:
    assert eqEps(0.05, 0.09, 0.1)
    assert eqEps(0.4, 0.4, 0.0)
    assert not eqEps(0.05, 0.2, 0.1)


def test_leqEps_toleranceWidensComparison() -> None:
    assert not leqEps(0.3 + 1e-12, 0.3, 0.0)
    assert leqEps(0.3 + 1e-12, 0.3, 0.0, tol=1e-9)


def test_leqEps_arraysGiveArrays() -> None:
    out = leqEps(np.array([0.05, 0.5]), np.array([0.0, 0.4]), 0.1)
    assert out.tolist() == [True, False]

# ----------------------------------------
# Operations
# ----------------------------------------

def test_truncate_raisesSmallValues() -> None:
    assert truncate(0.05, 0.1) == 0.1
    assert truncate(0.1, 0.1) == 0.1
    assert truncate(0.3, 0.1) == 0.3
    assert truncate(np.array([0.0, 0.5]), 0.2).tolist() == [0.2, 0.5]


def test_tnormEps_truncatesProducts() -> None:
    assert tnormEps(P, 0.2, 0.3, 0.1) == 0.1
    assert tnormEps(P, 0.5, 0.5, 0.1) == pytest.approx(0.25)


def test_residuumEps_liftsBothArgumentsToEpsilon() -> None:
    # (0.4 ∨ 0.1) → (0 ∨ 0.1) = 0.1 / 0.4
    assert residuumEps(P, 0.4, 0.0, 0.1) == pytest.approx(0.25)
    assert residuumEps(P, 0.05, 0.0, 0.1) == 1.0
    assert residuumEps(G, 0.4, 0.0, 0.1) == pytest.approx(0.1)


def test_meetEps_emptyAndClamped() -> None:
    assert meetEps([], 0.1) == 1.0
    assert meetEps([0.5, 0.3], 0.1) == 0.3
    assert meetEps([0.5, 0.05], 0.1) == 0.1


def test_joinEps_includesEpsilon() -> None:
    assert joinEps([], 0.2) == 0.2
    assert joinEps([0.1, 0.15], 0.2) == 0.2
    assert joinEps([0.1, 0.7], 0.2) == 0.7

# ----------------------------------------
# Squaring steps
# ----------------------------------------

def test_squaringSteps_productHalves() -> None:
    # 0.5 → 0.25 → 0.0625, truncated to 0.1
    assert squaringSteps(P, 0.5, 0.1) == 2
    assert squaringSteps(P, 0.05, 0.1) == 0


def test_squaringSteps_godelNeverShrinks() -> None:
    with pytest.raises(ValueRangeError):
        squaringSteps(G, 0.5, 0.1, maxSteps=50)


@pytest.mark.parametrize("lat", [P, H], ids=str)
@pytest.mark.parametrize("x", [0.3, 0.6, 0.9, 0.99])
@pytest.mark.parametrize("eps", [0.2, 0.05, 0.001])
def test_squaringStepBound_boundsObservedSteps(lat: Lattice, x: float, eps: float) -> None:
    assert squaringSteps(lat, x, eps) <= squaringStepBound(lat, x, eps)


def test_squaringStepBound_rejectsOtherStructures() -> None:
    with pytest.raises(ValueRangeError):
        squaringStepBound(G, 0.5, 0.1)
    with pytest.raises(ValueRangeError):
        squaringStepBound(P, 1.0, 0.1)
