# fuzzred/config/store.py
from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from fuzzred.core.errors import ConfigError
from .types import ConfigProvider, ConfigTarget, Validator

__all__ = ["ConfigStore", "deepMerge"]



def deepMerge(base: Mapping[str, Any], overlay: Mapping[str, Any]) -> dict[str, Any]:
    """Recursively merges `overlay` onto `base`. Mappings merge, everything else replaces."""
    out: dict[str, Any] = dict(base)
    for key, value in overlay.items():
        current = out.get(key)
        if isinstance(current, Mapping) and isinstance(value, Mapping):
            out[key] = deepMerge(current, value)
        elif value is not None:
            out[key] = value
    return out



class ConfigStore:
    """
    Minimal layered config store:
      - read: first hit from the topmost provider down
      - write: dispatch to a target provider (runtime/file)
      - validate: on set(), validate the *effective* merged document and roll back on failure
    """

    def __init__(self, *, namespace: str, validator: Validator | None, providers: list[ConfigProvider]):
        self.namespace = namespace
        self._validator = validator
        self._providers = providers

        # Index providers by role from their class names
        self._roleIdx: dict[str, int] = {}
        for idx, provider in enumerate(self._providers):
            name = provider.__class__.__name__.lower()
            if "override" in name:
                self._roleIdx.setdefault("runtime", idx)
            elif "file" in name:
                self._roleIdx.setdefault("file", idx)
            elif "default" in name:
                self._roleIdx.setdefault("defaults", idx)

    # ----- Helpers -----

    def _resolveTargetIdx(self, target: ConfigTarget) -> int:
        if target not in self._roleIdx:
            raise KeyError(f"No provider mapped for target '{target}' in {self.namespace}")
        return self._roleIdx[target]

    def merged(self) -> dict[str, Any]:
        merged: dict[str, Any] = {}
        # Bottom to top
        for provider in self._providers:
            merged = deepMerge(merged, provider.to_dict())
        return merged

    def validate(self) -> Any:
        """Runs the validator on the effective document and returns its result."""
        if self._validator is None:
            return self.merged()
        try:
            return self._validator(self.merged())
        except ConfigError:
            raise
        except Exception as err:
            raise ConfigError(f"{self.namespace}: invalid configuration: {err}") from err

    # ----- Public API -----

    def get(self, key: str) -> Any | None:
        for provider in reversed(self._providers): # Topmost first precedence
            value = provider.get(key)
            if value is not None:
                return value
        return None

    def set(self, key: str, value: Any, *, target: ConfigTarget = "runtime") -> None:
        idx = self._resolveTargetIdx(target)
        oldValue = self._providers[idx].get(key)
        # Provisional write to the target layer
        self._providers[idx].set(key, value)
        try:
            self.validate()
        except ConfigError:
            # Rollback; None deletes the key from the target layer
            self._providers[idx].set(key, oldValue)
            raise

    def snapshot(self) -> dict[str, Any]:
        return {
            "namespace": self.namespace,
            "values": self.merged(),
            "layers": [provider.__class__.__name__ for provider in self._providers],
        }
