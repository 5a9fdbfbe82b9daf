# fuzzred/cli/options.py
from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from pydantic.alias_generators import to_camel

from fuzzred.config.settings import config, configBool
from fuzzred.core.errors import ConfigError
from fuzzred.lattice import Lattice, Structure
from fuzzred.reduction import ReductionConfig
from .formats import AutomatonFormat

__all__ = ["RunOptions", "parseK", "buildRunOptions"]

_INFINITY = ("infinity", "inf", "∞")



def parseK(raw: object) -> int | None:
    """A word-length bound: a natural number, or "infinity" (None)."""
    if raw is None:
        return None
    if isinstance(raw, str):
        text = raw.strip().lower()
        if text in _INFINITY:
            return None
        try:
            raw = int(text)
        except ValueError as err:
            raise ConfigError(f"k must be a natural number or 'infinity', got {raw!r}") from err
    if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
        raise ConfigError(f"k must be a natural number or 'infinity', got {raw!r}")
    return raw



class RunOptions(BaseModel):
    """Options of one `fuzzred` invocation."""
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, extra="forbid", frozen=True)

    epsilon: float = Field(ge=0.0, le=1.0)
    k: int | None = Field(default=None, ge=0)
    structure: Structure = Structure.PRODUCT
    hamacherLambda: float = Field(default=0.0, ge=0.0)
    format: AutomatonFormat = AutomatonFormat.DENSE
    verbose: bool = False
    precision: float | None = Field(default=None, gt=0.0)
    maxClosure: int | None = Field(default=None, ge=1)
    trim: bool | None = None
    check: int = Field(default=0, ge=0)
    out: Path | None = None
    reportJson: Path | None = None

    @field_validator("k", mode="before")
    @classmethod
    def _parseK(cls, value: Any) -> int | None:
        try:
            return parseK(value)
        except ConfigError as err:
            raise ValueError(str(err)) from err

    @property
    def lattice(self) -> Lattice:
        return Lattice(self.structure, self.hamacherLambda)

    @property
    def checkLength(self) -> int:
        """Oracle word length: `check`, bounded by k when k is finite."""
        return self.check if self.k is None else min(self.check, self.k)

    def reductionConfig(self) -> ReductionConfig:
        """Merges the options with the `reduction.*` settings of the active config store."""
        return ReductionConfig(
            eps=self.epsilon,
            k=self.k,
            lattice=self.lattice,
            precision=self.precision if self.precision is not None else float(config("reduction.precision", 1e-12)),
            maxClosure=self.maxClosure if self.maxClosure is not None else int(config("reduction.maxClosure", 10_000_000)),
            trim=self.trim if self.trim is not None else configBool("reduction.trim", True),
        )



def buildRunOptions(**values: Any) -> RunOptions:
    """
    Raises:
        ConfigError: any option fails validation
    """
    try:
        return RunOptions.model_validate(values)
    except ValidationError as err:
        raise ConfigError(f"invalid options: {err}") from err
