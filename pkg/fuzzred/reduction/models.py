# fuzzred/reduction/models.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

from fuzzred.automaton import Ffa
from fuzzred.lattice import Lattice

__all__ = ["ReductionConfig", "RightReductionStats", "ReductionReport", "formatK"]

Branch = Literal["direct", "reversed"]



def formatK(k: int | None) -> str:
    return "infinity" if k is None else str(k)



class ReductionConfig(BaseModel):
    """
    Parameters of one reduction run.

    `k = None` means no bound on the word length. `precision` quantizes vectors
    for closure membership and afterset grouping; `maxClosure` caps the number
    of vectors the closure may hold. `trim` drops unreachable or unproductive
    states before reducing.
    """
    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
        extra="forbid",
        frozen=True,
        arbitrary_types_allowed=True,
    )

    eps: float = Field(default=0.0, ge=0.0, le=1.0)
    k: int | None = Field(default=None, ge=0)
    lattice: Lattice = Field(default_factory=Lattice)
    precision: float = Field(default=1e-12, gt=0.0)
    maxClosure: int = Field(default=10_000_000, ge=1)
    trim: bool = True

    @property
    def kLabel(self) -> str:
        return formatK(self.k)

    def describe(self) -> str:
        return f"structure={self.lattice} eps={self.eps:g} k={self.kLabel}"



@dataclass
class RightReductionStats:
    """Counters of one right-invariance reduction."""
    closureSteps: int = 0
    closureSize: int = 0
    rounds: int = 0
    halted: bool = False
    representatives: tuple[int, ...] = ()



@dataclass
class ReductionReport:
    """
    Result of the full algorithm plus deterministic run statistics.

    `phaseStateCounts` lists (label, states) in execution order; labels look like
    "trim", "direct/right#1", "direct/left#1", "reversed/right#1", "direct", "reversed".
    `representatives` pairs each right-reduction phase label with the original
    state indices that label the quotient states.
    """
    result: Ffa
    config: ReductionConfig
    inputStates: int
    keptStates: tuple[int, ...]
    branch: Branch = "reversed"
    whileLoopIterations: int = 0
    closureStepExecutions: int = 0
    closureSizes: list[int] = field(default_factory=list)
    phaseStateCounts: list[tuple[str, int]] = field(default_factory=list)
    representatives: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def remainingStates(self) -> int:
        return self.result.n

    def recordPhase(self, label: str, states: int) -> None:
        self.phaseStateCounts.append((label, states))

    def recordRightReduction(self, label: str, stats: RightReductionStats, states: int) -> None:
        self.closureStepExecutions += stats.closureSteps
        self.closureSizes.append(stats.closureSize)
        self.representatives.append((label, stats.representatives))
        self.recordPhase(label, states)

    def toDict(self) -> dict[str, Any]:
        a = self.result
        return {
            "structure": str(self.config.lattice),
            "eps": self.config.eps,
            "k": self.config.kLabel,
            "precision": self.config.precision,
            "inputStates": self.inputStates,
            "keptStates": list(self.keptStates),
            "remainingStates": a.n,
            "branch": self.branch,
            "whileLoopIterations": self.whileLoopIterations,
            "closureStepExecutions": self.closureStepExecutions,
            "closureSizes": list(self.closureSizes),
            "phases": [{"label": label, "states": states} for label, states in self.phaseStateCounts],
            "representatives": [{"label": label, "states": list(reps)} for label, reps in self.representatives],
            "automaton": {
                "alphabet": list(a.alphabet),
                "initial": a.initial.tolist(),
                "delta": [mat.tolist() for mat in a.delta],
                "final": a.final.tolist(),
            },
        }
