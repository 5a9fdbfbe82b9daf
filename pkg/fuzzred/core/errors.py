# fuzzred/core/errors.py
from __future__ import annotations

__all__ = [
    "FuzzredError",
    "DimensionError",
    "ValueRangeError",
    "ParseError",
    "ConfigError",
    "SymbolError",
    "ClosureCapError",
    "NotAnEpsFpoError",
    "EnumerationBudgetError",
    "AlphabetMismatchError",
    "InfeasibleShapeError",
    "CheckFailedError",
]



class FuzzredError(Exception):
    """Root of every error fuzzred raises on bad input or exhausted budgets."""
    exitCode: int = 1



class DimensionError(FuzzredError):
    """Vectors or matrices whose shapes do not fit together."""



class ValueRangeError(FuzzredError):
    """A degree outside [0,1], a negative Hamacher parameter, or a non-positive precision."""



class ParseError(FuzzredError):
    """Malformed automaton text. Messages carry the 1-based line number."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)



class ConfigError(FuzzredError):
    """Configuration layers or command-line options failed validation."""



class SymbolError(FuzzredError):
    """A word refers to a symbol index outside the alphabet."""



class ClosureCapError(FuzzredError):
    """
    The closure of truncated backward vectors grew past `maxClosure`.

    Usually means ε = 0 with k = ∞ on a structure that is not locally finite.
    """
    exitCode = 2

    def __init__(self, cap: int, steps: int) -> None:
        self.cap = cap
        self.steps = steps
        super().__init__(
            f"closure exceeded {cap} vectors after {steps} steps; "
            "use a positive epsilon or a finite k"
        )



class NotAnEpsFpoError(FuzzredError):
    """A relation handed to the quotient construction is not an ε-fuzzy pre-order."""



class EnumerationBudgetError(FuzzredError):
    """Exhaustive word enumeration would exceed the configured budget."""



class AlphabetMismatchError(FuzzredError):
    """Two automata compared by the oracle do not share an alphabet."""



class InfeasibleShapeError(FuzzredError):
    """A random automaton shape that cannot be generated."""



class CheckFailedError(FuzzredError):
    """The bounded oracle found a word on which the reduced automaton disagrees."""
    exitCode = 3
