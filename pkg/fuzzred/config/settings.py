# fuzzred/config/settings.py
from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from fuzzred.core.errors import ConfigError
from .providers import DefaultsProvider, FileProvider, OverrideProvider
from .store import ConfigStore
from .types import ConfigProvider

__all__ = [
    "Settings",
    "buildConfigStore",
    "getConfigStore",
    "setConfigStore",
    "loadSettings",
    "config",
    "configBool",
]



class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")



class ReductionSettings(_Section):
    precision: float = Field(default=1e-12, gt=0)
    maxClosure: int = Field(default=10_000_000, ge=1)
    trim: bool = True



class OracleSettings(_Section):
    maxWords: int = Field(default=1_000_000, ge=1)
    tolerance: float = Field(default=1e-9, ge=0)
    greatestMaxStates: int = Field(default=8, ge=1)



class SweepSettings(_Section):
    maxOracleLength: int = Field(default=8, ge=0)



class LoggingSettings(_Section):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"
    json_: bool = Field(default=False, alias="json")
    file: str | None = None

    model_config = ConfigDict(extra="forbid", populate_by_name=True)



class Settings(_Section):
    """Effective configuration document; used as the validator of the store."""
    reduction: ReductionSettings = Field(default_factory=ReductionSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)



def _validateDocument(document: dict[str, Any]) -> Settings:
    try:
        return Settings.model_validate(document)
    except ValidationError as err:
        raise ConfigError(f"invalid configuration: {err}") from err



def buildConfigStore(
    *,
    configPath: str | Path | None = None,
    overrides: Mapping[str, Any] | None = None,
    defaults: Mapping[str, Any] | None = None,
) -> ConfigStore:
    """
    Layers, bottom to top: shipped defaults, optional user file, in-memory overrides.
    `overrides` uses dotted keys ({"reduction.precision": 1e-9}); each one is validated as it lands.
    """
    providers: list[ConfigProvider] = [DefaultsProvider(defaults) if defaults is not None else DefaultsProvider()]
    if configPath is not None:
        providers.append(FileProvider(configPath))
    providers.append(OverrideProvider())

    store = ConfigStore(namespace="fuzzred", validator=_validateDocument, providers=providers)
    store.validate()
    for key, value in (overrides or {}).items():
        store.set(key, value)
    return store



_activeStore: ConfigStore | None = None



def getConfigStore() -> ConfigStore:
    """Process-wide store; built from the shipped defaults on first use."""
    global _activeStore
    if _activeStore is None:
        _activeStore = buildConfigStore()
    return _activeStore



def setConfigStore(store: ConfigStore | None) -> None:
    """Installs `store` as the process-wide store (None resets to lazy defaults)."""
    global _activeStore
    _activeStore = store



def loadSettings() -> Settings:
    return _validateDocument(getConfigStore().merged())



def config(path: str, default: Any = None) -> Any:
    value = getConfigStore().get(path)
    return default if value is None else value



def configBool(path: str, default: bool = False) -> bool:
    value = config(path, default)
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)
