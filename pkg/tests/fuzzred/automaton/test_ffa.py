# tests/fuzzred/automaton/test_ffa.py
from __future__ import annotations

import numpy as np
import pytest

from fuzzred.automaton import Ffa, defaultAlphabet
from fuzzred.core.errors import DimensionError, ValueRangeError


def test_build_defaultsAlphabetAndValidates(in1: Ffa) -> None:
    a = Ffa.build([1, 0], [np.eye(2), np.zeros((2, 2))], [0, 1])
    assert a.n == 2 and a.s == 2
    assert a.alphabet == ("s0", "s1")
    assert defaultAlphabet(3) == ("s0", "s1", "s2")
    assert in1.n == 7 and in1.alphabet == ("a",)


def test_ffa_arraysAreReadOnly(in1: Ffa) -> None:
    with pytest.raises(ValueError):
        in1.initial[0] = 0.5
    with pytest.raises(ValueError):
        in1.delta[0][0, 0] = 0.5


@pytest.mark.parametrize(
    "initial, delta, final",
    [
        ([1, 0], [np.eye(3)], [0, 1]),
        ([1, 0], [np.eye(2)], [0, 1, 0]),
        ([1, 0], [], [0, 1]),
        ([1, 0], [np.ones((2, 3))], [0, 1]),
    ],
)
def test_ffa_rejectsBadShapes(initial, delta, final) -> None:
    with pytest.raises(DimensionError):
        Ffa.build(initial, delta, final)


def test_ffa_rejectsBadDegreesAndNames() -> None:
    with pytest.raises(ValueRangeError):
        Ffa.build([1.5], [[[0.0]]], [0.0])
    with pytest.raises(DimensionError):
        Ffa.build([1.0], [[[0.0]], [[0.0]]], [0.0], alphabet=["x", "x"])
    with pytest.raises(DimensionError):
        Ffa.build([1.0], [[[0.0]]], [0.0], alphabet=["x", "y"])


def test_ffa_zeroStatesAllowed() -> None:
    a = Ffa.build([], [np.zeros((0, 0))], [])
    assert a.n == 0 and a.s == 1


def test_ffa_equalityIsExact(in1: Ffa, in2: Ffa) -> None:
    assert in1 == Ffa.build(in1.initial, in1.delta, in1.final, alphabet=in1.alphabet)
    assert in1 != in2
    assert in1 != Ffa.build(in1.initial, in1.delta, in1.final)  # default names differ
    with pytest.raises(TypeError):
        hash(in1)


def test_isCrisp(in1: Ffa) -> None:
    assert not in1.isCrisp
    assert Ffa.build([1, 0], [[[0, 1], [1, 0]]], [0, 1]).isCrisp
    assert "n=7" in repr(in1)
