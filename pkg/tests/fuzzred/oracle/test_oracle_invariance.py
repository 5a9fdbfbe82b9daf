# tests/fuzzred/oracle/test_oracle_invariance.py
from __future__ import annotations

import numpy as np
import pytest

from fuzzred.automaton import Ffa
from fuzzred.core.errors import DimensionError, EnumerationBudgetError
from fuzzred.lattice import Lattice
from fuzzred.oracle import verifyGreatest, verifyLeftInvariance, verifyRightInvariance
from fuzzred.reduction import closure, greatestLeftInvariance, greatestRightInvariance
from tests.fuzzred.automata import Z_01, Z_03, reductionConfig


def _restricted(a: Ffa, states: list[int]) -> Ffa:
    index = np.array(states, dtype=np.intp)
    return Ffa.build(
        a.initial[index],
        [mat[np.ix_(index, index)] for mat in a.delta],
        a.final[index],
        alphabet=a.alphabet,
    )


def test_verifyRightInvariance_knownRelations(in1: Ffa, product: Lattice) -> None:
    assert verifyRightInvariance(in1, Z_03, 0.0, 3, product)
    assert verifyRightInvariance(in1, Z_01, 0.1, 8, product)
    assert verifyRightInvariance(in1, np.eye(7), 0.0, 6, product)
    assert not verifyRightInvariance(in1, Z_03, 0.0, 4, product)


def test_verifyRightInvariance_rejectsRaisedEntry(in1: Ffa, product: Lattice) -> None:
    raised = np.array(Z_01)
    raised[0, 1] = 1.0
    assert not verifyRightInvariance(in1, raised, 0.1, 4, product)


def test_verifyRightInvariance_rejectsNonReflexive(in1: Ffa, product: Lattice) -> None:
    assert not verifyRightInvariance(in1, np.zeros((7, 7)), 0.5, 2, product)


def test_verifyRightInvariance_checksShape(in1: Ffa, product: Lattice) -> None:
    with pytest.raises(DimensionError):
        verifyRightInvariance(in1, np.eye(3), 0.0, 2, product)


def test_verifyLeftInvariance(in5: Ffa, product: Lattice) -> None:
    z = greatestLeftInvariance(in5, reductionConfig(0.1, k=4))
    assert verifyLeftInvariance(in5, z, 0.1, 4, product)
    assert verifyLeftInvariance(in5, np.eye(8), 0.0, 3, product)
    assert not verifyLeftInvariance(in5, np.ones((8, 8)), 0.0, 3, product)


def test_verifyGreatest_smallRestriction(in1: Ffa, product: Lattice) -> None:
    small = _restricted(in1, [0, 1, 2])
    cfg = reductionConfig(0.0, k=2)
    z = greatestRightInvariance(closure(small, cfg), cfg)
    assert np.array_equal(z, np.eye(3))
    assert verifyGreatest(small, z, 0.0, 2, product)


def test_verifyGreatest_detectsLoweredEntry(in1: Ffa, product: Lattice) -> None:
    small = _restricted(in1, [0, 1, 2])
    cfg = reductionConfig(0.1, k=2)
    z = greatestRightInvariance(closure(small, cfg), cfg)
    assert z[0, 1] == pytest.approx(0.25)
    assert verifyGreatest(small, z, 0.1, 2, product)

    lowered = np.array(z)
    lowered[0, 1] = 0.125
    assert verifyRightInvariance(small, lowered, 0.1, 2, product)
    assert not verifyGreatest(small, lowered, 0.1, 2, product)


def test_verifyGreatest_oneStateAllOnes(product: Lattice) -> None:
    a = Ffa.build([0.5], [[[0.5]]], [0.5])
    assert verifyGreatest(a, [[1.0]], 0.0, 3, product)


def test_verifyGreatest_in1AtEpsTenth(in1: Ffa, product: Lattice) -> None:
    assert verifyGreatest(in1, Z_01, 0.1, 5, product)


def test_verifyGreatest_refusesLargeAutomata(in1: Ffa, product: Lattice) -> None:
    with pytest.raises(EnumerationBudgetError):
        verifyGreatest(in1, np.eye(7), 0.0, 2, product, maxStates=5)
