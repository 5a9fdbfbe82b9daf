# fuzzred/sweep/main.py
from __future__ import annotations

import sys
from pathlib import Path

import click
from pydantic import ValidationError

from fuzzred.cli.command import FuzzredCommand
from fuzzred.cli.formats import AutomatonFormat, parseAutomaton
from fuzzred.cli.main import writeOutput
from fuzzred.config.settings import buildConfigStore, setConfigStore
from fuzzred.core.errors import ConfigError, FuzzredError
from fuzzred.core.logging import configureLogging
from .models import RandomShape, SweepSpec, ValueSet
from .runner import rowsToCsv, runSweep

__all__ = ["parseList", "parseSeeds", "parseShape", "main"]



def parseList(text: str) -> list[str]:
    """Comma-separated items, blanks dropped."""
    return [item.strip() for item in text.split(",") if item.strip()]



def _floats(text: str, what: str) -> list[float]:
    try:
        return [float(item) for item in parseList(text)]
    except ValueError as err:
        raise ConfigError(f"{what} must be comma-separated numbers, got {text!r}") from err



def parseSeeds(text: str) -> list[int]:
    """`a..b` (inclusive) or a comma-separated list."""
    try:
        if ".." in text:
            first, last = (int(part) for part in text.split("..", 1))
            if last < first:
                raise ConfigError(f"empty seed range {text!r}")
            return list(range(first, last + 1))
        return [int(item) for item in parseList(text)]
    except ValueError as err:
        raise ConfigError(f"seeds must look like 'a..b' or '1,2,3', got {text!r}") from err



def parseShape(text: str, values: ValueSet) -> RandomShape:
    """`n,s,density`."""
    parts = parseList(text)
    if len(parts) != 3:
        raise ConfigError(f"--random takes 'n,s,density', got {text!r}")
    try:
        return RandomShape(n=int(parts[0]), s=int(parts[1]), density=float(parts[2]), values=values)
    except (ValueError, ValidationError) as err:
        raise ConfigError(f"invalid random shape {text!r}: {err}") from err



def _valueSet(grid: str | None, interval: str | None, decimals: int) -> ValueSet:
    try:
        if grid:
            return ValueSet(grid=tuple(_floats(grid, "--values")))
        if interval:
            bounds = _floats(interval, "--interval")
            if len(bounds) != 2:
                raise ConfigError(f"--interval takes 'low,high', got {interval!r}")
            return ValueSet(low=bounds[0], high=bounds[1], decimals=decimals)
        return ValueSet(decimals=decimals)
    except ValidationError as err:
        raise ConfigError(f"invalid value set: {err}") from err



@click.command(cls=FuzzredCommand, context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-i", "--input", "inputPath", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Automaton file to sweep over.")
@click.option("--sparse", is_flag=True, help="The input file uses the sparse format.")
@click.option("--random", "randomShape", default=None, help="Generate automata of shape 'n,s,density'.")
@click.option("--seeds", default="0", show_default=True, help="Seeds for --random: 'a..b' or '1,2,3'.")
@click.option("--values", "grid", default=None, help="Degree grid for --random, e.g. '0.2,0.5,0.8'.")
@click.option("--interval", default=None, help="Degree interval 'low,high' for --random.")
@click.option("--decimals", type=int, default=2, show_default=True, help="Rounding of interval degrees.")
@click.option("--structures", default="P,H,G,L,N", show_default=True, help="Comma-separated structure codes.")
@click.option("--hamacher-lambda", type=float, default=0.0, show_default=True)
@click.option("--eps", "epsilons", default="0,0.1,0.2", show_default=True, help="Comma-separated epsilons.")
@click.option("--k", "ks", default="infinity", show_default=True, help="Comma-separated bounds, 'infinity' allowed.")
@click.option("--check", type=int, default=0, show_default=True, help="Oracle word length per cell, 0 to skip.")
@click.option("--precision", type=float, default=None)
@click.option("--max-closure", type=int, default=None)
@click.option("-o", "--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="CSV file.")
@click.option("--config", "configPath", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None)
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None)
def main(
    inputPath: Path | None,
    sparse: bool,
    randomShape: str | None,
    seeds: str,
    grid: str | None,
    interval: str | None,
    decimals: int,
    structures: str,
    hamacher_lambda: float,
    epsilons: str,
    ks: str,
    check: int,
    precision: float | None,
    max_closure: int | None,
    out: Path | None,
    configPath: Path | None,
    log_level: str | None,
) -> None:
    """Reduce one automaton, or a family of random ones, over a grid of structures, epsilons and bounds."""
    try:
        overrides = {"logging.level": log_level.upper()} if log_level else {}
        setConfigStore(buildConfigStore(configPath=configPath, overrides=overrides))
        configureLogging()

        automaton = None
        shape = None
        if inputPath is not None:
            fmt = AutomatonFormat.SPARSE if sparse else AutomatonFormat.DENSE
            automaton = parseAutomaton(inputPath.read_text(encoding="utf-8"), fmt)
        if randomShape is not None:
            shape = parseShape(randomShape, _valueSet(grid, interval, decimals))

        try:
            spec = SweepSpec(
                structures=tuple(parseList(structures)),
                epsilons=tuple(_floats(epsilons, "--eps")),
                ks=tuple(parseList(ks)),
                hamacherLambda=hamacher_lambda,
                label=inputPath.name if inputPath is not None else "input",
                random=shape,
                seeds=tuple(parseSeeds(seeds)),
                check=check,
                precision=precision,
                maxClosure=max_closure,
            )
        except ValidationError as err:
            raise ConfigError(f"invalid sweep: {err}") from err

        text = rowsToCsv(runSweep(spec, automaton))
    except FuzzredError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(err.exitCode)

    if out is not None:
        try:
            writeOutput(out, text, "CSV")
        except ConfigError as err:
            click.echo(f"error: {err}", err=True)
            sys.exit(err.exitCode)
    else:
        click.echo(text, nl=False)



if __name__ == "__main__":
    main()
