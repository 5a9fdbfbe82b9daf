# fuzzred/cli/main.py
from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from fuzzred.automaton import Ffa, formatWord
from fuzzred.config.settings import buildConfigStore, setConfigStore
from fuzzred.core.errors import CheckFailedError, ConfigError, FuzzredError
from fuzzred.core.jsonutils import safeJsonDumps
from fuzzred.core.logging import configureLogging
from fuzzred.lattice import Structure
from fuzzred.oracle import EquivalenceVerdict, checkEpsEquivalent
from fuzzred.reduction import ReductionReport, softStateReduction
from .command import FuzzredCommand
from .formats import AutomatonFormat, formatValue, parseAutomaton, serializeAutomaton
from .options import RunOptions, buildRunOptions

logger = logging.getLogger(__name__)

__all__ = ["RunOutcome", "run", "formatReport", "describeVerdict", "writeOutput", "main"]



@dataclass(frozen=True)
class RunOutcome:
    """What one invocation prints: `output` to stdout (or --out), `message` as one line to stderr."""
    output: str
    exitCode: int = 0
    message: str | None = None
    report: ReductionReport | None = None



def formatReport(report: ReductionReport) -> str:
    """Verbose execution details as `#` comment lines, so the output stays parseable."""
    lines = [
        f"# {report.config.describe()}",
        f"# states: {report.inputStates} -> {report.remainingStates} ({report.branch} branch)",
    ]
    lines += [f"# phase {label}: {states} states" for label, states in report.phaseStateCounts]
    lines += [
        f"# while-loop iterations: {report.whileLoopIterations}",
        f"# closure-step executions: {report.closureStepExecutions}",
        f"# largest closure: {max(report.closureSizes, default=0)} vectors",
    ]
    return "\n".join(lines) + "\n"



def describeVerdict(verdict: EquivalenceVerdict, a: Ffa) -> str:
    eps = formatValue(verdict.eps)
    if verdict.equal:
        return f"EQUIVALENT(eps={eps}, k={verdict.k})"
    assert verdict.word is not None and verdict.left is not None and verdict.right is not None
    return (
        f"COUNTEREXAMPLE(eps={eps}, k={verdict.k}) word={formatWord(a, verdict.word)} "
        f"input={formatValue(verdict.left)} reduced={formatValue(verdict.right)}"
    )



def writeOutput(path: Path, text: str, what: str) -> None:
    """Writes `text` to `path`; OS failures become ConfigError."""
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as err:
        raise ConfigError(f"cannot write {what} to '{path}': {err.strerror or err}") from err



def run(options: RunOptions, text: str) -> RunOutcome:
    """
    Parses `text`, reduces it and renders the result.

    Never raises for bad input: failures become an exit code (1 input or
    configuration, 2 closure cap, 3 failed check) plus a one-line message.
    """
    try:
        a = parseAutomaton(text, options.format)
        cfg = options.reductionConfig()
        report = softStateReduction(a, cfg)

        output = serializeAutomaton(report.result, AutomatonFormat.DENSE)
        if options.verbose:
            output += formatReport(report)
        if options.reportJson is not None:
            writeOutput(options.reportJson, safeJsonDumps(report.toDict(), indent=2) + "\n", "report")

        if options.check > 0:
            verdict = checkEpsEquivalent(a, report.result, cfg.eps, options.checkLength, cfg.lattice)
            line = describeVerdict(verdict, a)
            output += line + "\n"
            if not verdict:
                err = CheckFailedError(f"check failed: {line}")
                return RunOutcome(output=output, exitCode=err.exitCode, message=str(err), report=report)

        return RunOutcome(output=output, report=report)
    except FuzzredError as err:
        logger.debug("run failed", exc_info=True)
        return RunOutcome(output="", exitCode=err.exitCode, message=f"error: {err}")



@click.command(cls=FuzzredCommand, context_settings={"help_option_names": ["-h", "--help"]})
@click.argument("epsilon", type=float)
@click.option("-k", "--k", "k", default="infinity", show_default=True, help="Word length bound, or 'infinity'.")
@click.option("-s", "--structure", type=click.Choice([s.value for s in Structure]), default="P", show_default=True,
              help="P product, H Hamacher, G Gödel, L Łukasiewicz, N nilpotent minimum.")
@click.option("--hamacher-lambda", type=float, default=0.0, show_default=True, help="Hamacher family parameter.")
@click.option("--sparse", is_flag=True, help="Read the sparse input format.")
@click.option("-v", "--verbose", is_flag=True, help="Print phase state counts and counters.")
@click.option("--precision", type=float, default=None, help="Quantization step (default from config).")
@click.option("--max-closure", type=int, default=None, help="Closure size cap (default from config).")
@click.option("--no-trim", is_flag=True, help="Skip trimming unreachable and unproductive states.")
@click.option("--check", type=int, default=0, show_default=True, help="Oracle word length, 0 to skip.")
@click.option("-i", "--input", "inputPath", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Input file (default stdin).")
@click.option("-o", "--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Output file.")
@click.option("--report-json", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the reduction report as JSON.")
@click.option("--config", "configPath", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="json5 settings file layered over the defaults.")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Overrides logging.level.")
def main(
    epsilon: float,
    k: str,
    structure: str,
    hamacher_lambda: float,
    sparse: bool,
    verbose: bool,
    precision: float | None,
    max_closure: int | None,
    no_trim: bool,
    check: int,
    inputPath: Path | None,
    out: Path | None,
    report_json: Path | None,
    configPath: Path | None,
    log_level: str | None,
) -> None:
    """
    Soft state reduction of a fuzzy finite automaton.

    Reads the automaton from stdin (or --input) and prints the reduced one in
    the dense format. EPSILON is the approximation degree in [0,1].
    """
    try:
        overrides = {"logging.level": log_level.upper()} if log_level else {}
        setConfigStore(buildConfigStore(configPath=configPath, overrides=overrides))
        configureLogging()
        options = buildRunOptions(
            epsilon=epsilon,
            k=k,
            structure=structure,
            hamacherLambda=hamacher_lambda,
            format=AutomatonFormat.SPARSE if sparse else AutomatonFormat.DENSE,
            verbose=verbose,
            precision=precision,
            maxClosure=max_closure,
            trim=False if no_trim else None,
            check=check,
            out=out,
            reportJson=report_json,
        )
    except FuzzredError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(err.exitCode)

    text = inputPath.read_text(encoding="utf-8") if inputPath is not None else click.get_text_stream("stdin").read()
    outcome = run(options, text)

    if outcome.output:
        if out is not None:
            try:
                writeOutput(out, outcome.output, "output")
            except ConfigError as err:
                click.echo(f"error: {err}", err=True)
                sys.exit(err.exitCode)
        else:
            click.echo(outcome.output, nl=False)
    if outcome.message:
        click.echo(outcome.message, err=True)
    sys.exit(outcome.exitCode)



if __name__ == "__main__":
    main()
