# fuzzred/cli/command.py
from __future__ import annotations

import sys
from typing import Any

import click

from fuzzred.core.errors import ConfigError

__all__ = ["FuzzredCommand"]



class FuzzredCommand(click.Command):
    """
    click command whose usage errors print one `error: ...` line and exit with
    ConfigError's code. click's own code for them, 2, is the closure-cap code.
    """

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.ClickException as err:
            click.echo(f"error: {err.format_message()}", err=True)
            sys.exit(ConfigError.exitCode)
        except click.Abort:
            click.echo("error: aborted", err=True)
            sys.exit(ConfigError.exitCode)
