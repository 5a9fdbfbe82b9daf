# fuzzred/sweep/models.py
from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic.alias_generators import to_camel

from fuzzred.cli.options import parseK
from fuzzred.core.errors import ConfigError
from fuzzred.lattice import Structure

__all__ = ["ValueSet", "RandomShape", "SweepSpec", "SweepRow"]



class _Model(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, extra="forbid", frozen=True)



class ValueSet(_Model):
    """
    Degrees used for nonzero entries of generated automata.

    Either a finite `grid`, or the interval [low, high] rounded to `decimals`
    places (no rounding when `decimals` is None).
    """
    grid: tuple[float, ...] = ()
    low: float = Field(default=0.0, ge=0.0, le=1.0)
    high: float = Field(default=1.0, ge=0.0, le=1.0)
    decimals: int | None = Field(default=2, ge=0)

    @field_validator("grid")
    @classmethod
    def _gridInRange(cls, grid: tuple[float, ...]) -> tuple[float, ...]:
        if any(v < 0.0 or v > 1.0 for v in grid):
            raise ValueError("grid values must lie in [0,1]")
        return tuple(sorted(set(grid)))

    @model_validator(mode="after")
    def _ordered(self) -> ValueSet:
        if not self.grid and self.low > self.high:
            raise ValueError(f"interval [{self.low}, {self.high}] is empty")
        return self



class RandomShape(_Model):
    n: int = Field(ge=1)
    s: int = Field(ge=1)
    density: float = Field(gt=0.0, le=1.0)
    values: ValueSet = Field(default_factory=ValueSet)



class SweepSpec(_Model):
    """
    A grid of structures × ε × k, run on one automaton or on generated ones.

    The automaton comes from the caller of `runSweep`, or with `random` one is
    generated per seed. `label` names the caller's automaton in the rows.
    `check` > 0 runs the oracle on every cell with word length
    min(check, k, sweep.maxOracleLength).
    """
    structures: tuple[Structure, ...] = Field(min_length=1)
    epsilons: tuple[float, ...] = Field(min_length=1)
    ks: tuple[int | None, ...] = Field(min_length=1)
    hamacherLambda: float = Field(default=0.0, ge=0.0)
    label: str = "input"
    random: RandomShape | None = None
    seeds: tuple[int, ...] = Field(default=(0,), min_length=1)
    check: int = Field(default=0, ge=0)
    precision: float | None = Field(default=None, gt=0.0)
    maxClosure: int | None = Field(default=None, ge=1)

    @field_validator("epsilons")
    @classmethod
    def _epsInRange(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        if any(v < 0.0 or v > 1.0 for v in values):
            raise ValueError("epsilon values must lie in [0,1]")
        return values

    @field_validator("ks", mode="before")
    @classmethod
    def _parseKs(cls, values: Any) -> tuple[int | None, ...]:
        try:
            return tuple(parseK(v) for v in values)
        except ConfigError as err:
            raise ValueError(str(err)) from err



class SweepRow(_Model):
    automaton: str
    structure: Structure
    eps: float
    k: int | None
    remainingStates: int | None = None
    closureSteps: int | None = None
    loopIterations: int | None = None
    check: str = ""
    error: str = ""
