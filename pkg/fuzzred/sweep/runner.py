# fuzzred/sweep/runner.py
from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable

from fuzzred.automaton import Ffa
from fuzzred.cli.formats import formatValue
from fuzzred.cli.main import describeVerdict
from fuzzred.config.settings import config, configBool
from fuzzred.core.errors import ConfigError, FuzzredError
from fuzzred.lattice import Lattice, Structure
from fuzzred.oracle import checkEpsEquivalent
from fuzzred.reduction import ReductionConfig, formatK, softStateReduction
from .generator import generateRandom
from .models import SweepRow, SweepSpec

logger = logging.getLogger(__name__)

__all__ = ["CSV_COLUMNS", "runSweep", "runCell", "rowsToCsv"]

CSV_COLUMNS = (
    "automaton",
    "structure",
    "eps",
    "k",
    "remaining_states",
    "closure_steps",
    "loop_iterations",
    "check",
    "error",
)

_STRUCTURE_ORDER = {structure: idx for idx, structure in enumerate(Structure)}



def _sortKey(row: SweepRow, labels: dict[str, int]) -> tuple:
    return (
        labels.get(row.automaton, len(labels)),
        _STRUCTURE_ORDER[row.structure],
        row.eps,
        float("inf") if row.k is None else row.k,
    )



def runCell(label: str, a: Ffa, cfg: ReductionConfig, check: int) -> SweepRow:
    """One grid cell. Library errors land in the row's error column."""
    row = {"automaton": label, "structure": cfg.lattice.structure, "eps": cfg.eps, "k": cfg.k}
    try:
        report = softStateReduction(a, cfg)
        row.update(
            remainingStates=report.remainingStates,
            closureSteps=report.closureStepExecutions,
            loopIterations=report.whileLoopIterations,
        )
        if check > 0:
            length = min(check, int(config("sweep.maxOracleLength", 8)))
            if cfg.k is not None:
                length = min(length, cfg.k)
            row["check"] = describeVerdict(checkEpsEquivalent(a, report.result, cfg.eps, length, cfg.lattice), a)
    except FuzzredError as err:
        logger.info("cell %s %s failed: %s", label, cfg.describe(), err)
        row["error"] = f"{type(err).__name__}: {err}"
    return SweepRow(**row)



def runSweep(spec: SweepSpec, automaton: Ffa | None = None) -> list[SweepRow]:
    """
    Runs every (automaton, structure, ε, k) cell of the grid.

    Rows come back sorted by automaton, structure (P, H, G, L, N), ε and k
    (infinity last), whatever order the axes were given in.

    Raises:
        ConfigError: both or neither of `automaton` and `spec.random` given
    """
    if (automaton is None) == (spec.random is None):
        raise ConfigError("a sweep needs exactly one of an input automaton or a random shape")

    if automaton is not None:
        sources = [(spec.label, automaton)]
    else:
        shape = spec.random
        assert shape is not None
        sources = [
            (f"seed={seed}", generateRandom(shape.n, shape.s, shape.density, shape.values, seed))
            for seed in spec.seeds
        ]

    precision = spec.precision if spec.precision is not None else float(config("reduction.precision", 1e-12))
    maxClosure = spec.maxClosure if spec.maxClosure is not None else int(config("reduction.maxClosure", 10_000_000))
    trim = configBool("reduction.trim", True)

    rows: list[SweepRow] = []
    for label, a in sources:
        for structure in dict.fromkeys(spec.structures):
            lattice = Lattice(structure, spec.hamacherLambda)
            for eps in dict.fromkeys(spec.epsilons):
                for k in dict.fromkeys(spec.ks):
                    cfg = ReductionConfig(eps=eps, k=k, lattice=lattice, precision=precision,
                                          maxClosure=maxClosure, trim=trim)
                    rows.append(runCell(label, a, cfg, spec.check))

    labels = {label: idx for idx, (label, _) in enumerate(sources)}
    rows.sort(key=lambda row: _sortKey(row, labels))
    logger.info("sweep finished: %d cells, %d failed", len(rows), sum(1 for row in rows if row.error))
    return rows



def _cells(row: SweepRow) -> list[str]:
    def optional(value: int | None) -> str:
        return "" if value is None else str(value)

    return [
        row.automaton,
        row.structure.value,
        formatValue(row.eps),
        formatK(row.k),
        optional(row.remainingStates),
        optional(row.closureSteps),
        optional(row.loopIterations),
        row.check,
        row.error,
    ]



def rowsToCsv(rows: Iterable[SweepRow]) -> str:
    """CSV text with a header row; degrees rendered like the automaton format."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(_cells(row))
    return buffer.getvalue()
