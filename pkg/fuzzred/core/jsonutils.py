# fuzzred/core/jsonutils.py
from __future__ import annotations

import json
import math
from collections.abc import Mapping
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

__all__ = ["safeJsonDumps", "tryJSONify"]



def tryJSONify(value: Any, *, _depth: int = 0, _maxDepth: int | None = 64) -> Any:
    """
    Best-effort conversion into JSON-safe data.

      - numpy scalars and arrays → Python floats / nested lists
      - Enum → its value, Path → str
      - tuples and sets → lists (sets sorted by repr for determinism)
      - pydantic models → model_dump(by_alias=True)
      - non-finite floats → their string form ("inf", "nan")
      - anything else → repr()
    """
    if _maxDepth is not None and _depth > _maxDepth:
        return "<max depth>"
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, np.generic):
        return tryJSONify(value.item(), _depth=_depth + 1, _maxDepth=_maxDepth)
    if isinstance(value, np.ndarray):
        return tryJSONify(value.tolist(), _depth=_depth + 1, _maxDepth=_maxDepth)
    if isinstance(value, Enum):
        return tryJSONify(value.value, _depth=_depth + 1, _maxDepth=_maxDepth)
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, "model_dump"):
        try:
            return tryJSONify(value.model_dump(by_alias=True), _depth=_depth + 1, _maxDepth=_maxDepth)
        except Exception:
            return repr(value)
    if isinstance(value, Mapping):
        return {str(key): tryJSONify(val, _depth=_depth + 1, _maxDepth=_maxDepth) for key, val in value.items()}
    if isinstance(value, (set, frozenset)):
        return [tryJSONify(item, _depth=_depth + 1, _maxDepth=_maxDepth) for item in sorted(value, key=repr)]
    if isinstance(value, (list, tuple)):
        return [tryJSONify(item, _depth=_depth + 1, _maxDepth=_maxDepth) for item in value]
    return repr(value)



def safeJsonDumps(obj: object, *, indent: int | None = None) -> str:
    """
    Serializes an object to a JSON string.
    Compact separators unless `indent` is given; NaN/infinity are never emitted.
    If direct JSON encoding fails, falls back to tryJSONify and retries.
    """
    separators = (",", ":") if indent is None else (",", ": ")
    try:
        return json.dumps(obj, ensure_ascii=False, allow_nan=False, separators=separators, indent=indent)
    except (TypeError, ValueError):
        safePayload = tryJSONify(obj, _maxDepth=None)
        return json.dumps(safePayload, ensure_ascii=False, allow_nan=False, separators=separators, indent=indent)
