# fuzzred/core/logging/formatters.py
from __future__ import annotations

import logging

from fuzzred.core.jsonutils import safeJsonDumps
from .context import getLogContext

__all__ = ["JsonFormatter", "DevFormatter", "RUN_FIELDS"]



# Reduction context keys promoted to top-level fields, in this order.
RUN_FIELDS = ("phase", "structure", "eps", "k")



class JsonFormatter(logging.Formatter):
    """
    One JSON object per record, for log files and `logging.json`.

    The reduction context (phase, structure, eps, k) becomes top-level fields;
    any other context keys go to `ctx`.
    """
    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, object] = {
            "ts": round(record.created, 3),
            "level": record.levelname.lower(),
            "logger": record.name,
            "msg": record.getMessage(),
        }
        ctx = dict(getLogContext() or {})
        for key in RUN_FIELDS:
            value = ctx.pop(key, None)
            if value is not None:
                payload[key] = value
        if ctx:
            payload["ctx"] = ctx

        if record.exc_info and record.exc_info[0] is not None:
            payload["exc"] = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "stack": self.formatException(record.exc_info),
            }
        return safeJsonDumps(payload)



class DevFormatter(logging.Formatter):
    """Human-friendly console formatter."""
    def format(self, record: logging.LogRecord) -> str:
        ctx = getLogContext()
        ctxStr = ""
        if ctx:
            md = []
            for key in RUN_FIELDS:
                value = ctx.get(key)
                if value is not None:
                    md.append(f"{key}={value}" if key in ("eps", "k") else str(value))
            if md:
                ctxStr = " [" + "/".join(md) + "]"
        msg = record.getMessage()
        if record.exc_info:
            msg += "\n" + self.formatException(record.exc_info)
        if record.stack_info:
            msg += "\n" + str(record.stack_info)
        return f"{record.levelname}: [{record.name}] {msg}{ctxStr}"
