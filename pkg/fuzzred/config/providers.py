# fuzzred/config/providers.py
from __future__ import annotations

import copy
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any, cast

import json5

from fuzzred.core.dictpath import getByPath, setByPath, deleteByPath
from fuzzred.core.errors import ConfigError
from .types import ConfigProvider

logger = logging.getLogger(__name__)

__all__ = ["OverrideProvider", "DefaultsProvider", "FileProvider", "DEFAULTS_PATH"]

DEFAULTS_PATH = Path(__file__).with_name("defaults.json5")



def _loadJson5Object(path: Path, owner: str) -> dict[str, Any]:
    try:
        parsed = json5.loads(path.read_text("utf-8"))
    except Exception as err:
        raise ConfigError(f"{owner}: failed to parse '{path}': {err}") from err
    if parsed is None:
        return {}
    if not isinstance(parsed, Mapping):
        raise ConfigError(f"{owner}: file content must be a JSON object, not '{type(parsed).__name__}'")
    return dict(cast(Mapping[str, Any], parsed))


# ----------------------------------------------
#          OverrideProvider (in-memory)
# ----------------------------------------------

class OverrideProvider(ConfigProvider):
    """
    Volatile, writable, topmost layer. Command-line flags land here.
    """
    def __init__(self) -> None:
        self._data: dict[str, Any] = {}

    def get(self, key: str) -> Any | None:
        return getByPath(self._data, key, None)

    def set(self, key: str, value: Any) -> None:
        if value is None:
            deleteByPath(self._data, key, pruneEmptyParents=True)
            return
        setByPath(self._data, key, copy.deepcopy(value), createIfMissing=True)

    def to_dict(self) -> dict[str, Any]:
        return copy.deepcopy(self._data)


# ----------------------------------------------
#              Shipped defaults
# ----------------------------------------------

class DefaultsProvider(ConfigProvider):
    """
    Read-only provider for shipped default configuration.

    Initialized either from a JSON5 file (via `path`) or from an in-memory
    mapping (via `data`). With neither, the packaged defaults.json5 is used.

    Raises:
        ValueError: if both `data` and `path` are provided
        ConfigError: if the file is missing, unparsable or not an object
    """
    def __init__(self, data: Mapping[str, Any] | None = None, *, path: Path | str | None = None) -> None:
        if data is not None and path is not None:
            raise ValueError(f"{type(self).__name__}: provide either 'data' or 'path', not both")

        if data is not None:
            if not isinstance(data, Mapping):
                raise ConfigError(f"{type(self).__name__}: 'data' must be a Mapping, not '{type(data).__name__}'")
            self.data: dict[str, Any] = copy.deepcopy(dict(data))
            return

        path = Path(path) if path is not None else DEFAULTS_PATH
        if not path.is_file():
            raise ConfigError(f"{type(self).__name__}: defaults file '{path}' not found")
        self.data = _loadJson5Object(path, type(self).__name__)

    def get(self, key: str) -> Any | None:
        return getByPath(self.data, key, None)

    def set(self, key: str, value: Any) -> None:
        raise RuntimeError(f"{type(self).__name__}: is read-only")

    def to_dict(self) -> dict[str, Any]:
        return copy.deepcopy(self.data)


# ----------------------------------------------
#          User file (JSON/JSON5, read-only)
# ----------------------------------------------

class FileProvider(ConfigProvider):
    """
    User configuration file layered above the defaults (`fuzzred --config`).

    Behavior:
        • Missing file → ConfigError (the user asked for it explicitly)
        • Parse error or non-object JSON → ConfigError
        • set() edits the in-memory copy only; nothing is written back
    """
    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        if not self.path.exists():
            raise ConfigError(f"{type(self).__name__}: config file '{self.path}' not found")
        if not self.path.is_file():
            raise ConfigError(f"{type(self).__name__}: '{self.path}' exists but is not a file")
        self._data = _loadJson5Object(self.path, type(self).__name__)
        logger.debug("%s: loaded %d top-level keys from '%s'", type(self).__name__, len(self._data), self.path)

    def get(self, key: str) -> Any | None:
        return getByPath(self._data, key, None)

    def set(self, key: str, value: Any) -> None:
        if value is None:
            deleteByPath(self._data, key, pruneEmptyParents=True)
            return
        setByPath(self._data, key, copy.deepcopy(value), createIfMissing=True)

    def to_dict(self) -> dict[str, Any]:
        return copy.deepcopy(self._data)
