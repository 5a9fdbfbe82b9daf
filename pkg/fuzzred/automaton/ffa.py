# fuzzred/automaton/ffa.py
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from fuzzred.core.errors import DimensionError
from fuzzred.fuzzy import FuzzyMat, FuzzyVec, asFuzzyMat, asFuzzyVec

__all__ = ["Ffa", "defaultAlphabet"]



def defaultAlphabet(size: int) -> tuple[str, ...]:
    return tuple(f"s{idx}" for idx in range(size))



@dataclass(frozen=True, eq=False)
class Ffa:
    """
    Fuzzy finite automaton ⟨Q, Σ, I, δ, F⟩ with Q = {0, …, n−1}.

    `delta[j]` is the transition relation of the j-th symbol. All arrays are
    validated on construction and stored read-only, so instances are immutable
    and safe to share. A 0-state automaton is allowed; its language is 0.
    """
    initial: FuzzyVec
    delta: tuple[FuzzyMat, ...]
    final: FuzzyVec
    alphabet: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        initial = asFuzzyVec(self.initial, what="initial vector")
        n = initial.shape[0]
        final = asFuzzyVec(self.final, n, what="final vector")
        if len(self.delta) == 0:
            raise DimensionError("the alphabet must contain at least one symbol")
        delta = tuple(asFuzzyMat(mat, n, what=f"transition matrix {idx}") for idx, mat in enumerate(self.delta))

        alphabet = tuple(str(name) for name in self.alphabet) or defaultAlphabet(len(delta))
        if len(alphabet) != len(delta):
            raise DimensionError(f"{len(alphabet)} symbol names for {len(delta)} transition matrices")
        if len(set(alphabet)) != len(alphabet):
            raise DimensionError(f"symbol names must be unique, got {alphabet}")

        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "final", final)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def build(
        cls,
        initial: ArrayLike,
        delta: Sequence[ArrayLike],
        final: ArrayLike,
        alphabet: Sequence[str] | None = None,
    ) -> Ffa:
        return cls(
            initial=np.asarray(initial, dtype=np.float64),
            delta=tuple(np.asarray(mat, dtype=np.float64) for mat in delta),
            final=np.asarray(final, dtype=np.float64),
            alphabet=tuple(alphabet or ()),
        )

    @property
    def n(self) -> int:
        return int(self.initial.shape[0])

    @property
    def s(self) -> int:
        return len(self.delta)

    @property
    def isCrisp(self) -> bool:
        """Every degree is 0 or 1."""
        arrays = (self.initial, self.final, *self.delta)
        return all(bool(np.all((arr == 0.0) | (arr == 1.0))) for arr in arrays)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ffa):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and np.array_equal(self.initial, other.initial)
            and np.array_equal(self.final, other.final)
            and all(np.array_equal(mine, theirs) for mine, theirs in zip(self.delta, other.delta))
        )

    __hash__ = None # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Ffa(n={self.n}, alphabet={list(self.alphabet)})"
