# fuzzred/reduction/soft.py
from __future__ import annotations

import logging

from fuzzred.automaton import Ffa, reverse, trim
from fuzzred.core.logging import resetLogContext, setLogContext
from .closure import closure
from .invariance import greatestRightInvariance
from .models import ReductionConfig, ReductionReport, RightReductionStats
from .quotient import afterSetAutomaton

logger = logging.getLogger(__name__)

__all__ = [
    "reduceByRightInvariance",
    "reduceByLeftInvariance",
    "softStateReduction0",
    "softStateReduction",
]



def reduceByRightInvariance(a: Ffa, cfg: ReductionConfig) -> tuple[Ffa, RightReductionStats]:
    """
    One pass: closure, greatest right (ε,k)-invariance, afterset automaton.

    An automaton without states is returned as is.
    """
    if a.n == 0:
        return a, RightReductionStats(halted=True)
    vectors = closure(a, cfg)
    z = greatestRightInvariance(vectors, cfg)
    reduced, reps = afterSetAutomaton(a, z, cfg)
    stats = RightReductionStats(
        closureSteps=vectors.steps,
        closureSize=len(vectors),
        rounds=vectors.rounds,
        halted=vectors.halted,
        representatives=reps,
    )
    return reduced, stats



def reduceByLeftInvariance(a: Ffa, cfg: ReductionConfig) -> tuple[Ffa, RightReductionStats]:
    reduced, stats = reduceByRightInvariance(reverse(a), cfg)
    return reverse(reduced), stats



def softStateReduction0(
    a: Ffa,
    cfg: ReductionConfig,
    report: ReductionReport | None = None,
    *,
    label: str = "direct",
) -> tuple[Ffa, ReductionReport]:
    """
    Alternates right and left reductions while the state count strictly drops.

    Every pass of the loop counts as one iteration, the last non-improving one
    included. Counters are added to `report` (a fresh one when omitted); its
    `result` is set to the returned automaton.
    """
    if report is None:
        report = ReductionReport(result=a, config=cfg, inputStates=a.n, keptStates=tuple(range(a.n)))

    current = a
    iteration = 0
    while True:
        iteration += 1
        report.whileLoopIterations += 1

        rightLabel = f"{label}/right#{iteration}"
        token = setLogContext(phase=rightLabel)
        try:
            afterRight, stats = reduceByRightInvariance(current, cfg)
        finally:
            resetLogContext(token)
        report.recordRightReduction(rightLabel, stats, afterRight.n)

        leftLabel = f"{label}/left#{iteration}"
        token = setLogContext(phase=leftLabel)
        try:
            afterLeft, stats = reduceByLeftInvariance(afterRight, cfg)
        finally:
            resetLogContext(token)
        report.recordRightReduction(leftLabel, stats, afterLeft.n)

        logger.debug("%s pass %d: %d -> %d -> %d states", label, iteration, current.n, afterRight.n, afterLeft.n)
        if afterLeft.n < current.n:
            current = afterLeft
        else:
            break

    report.result = current
    return current, report



def _warnIfUnbounded(a: Ffa, cfg: ReductionConfig) -> None:
    if cfg.eps == 0.0 and cfg.k is None and not cfg.lattice.isLocallyFinite and not a.isCrisp:
        logger.warning(
            "eps=0 with unbounded k over %s may not terminate; the closure is capped at %d vectors",
            cfg.lattice, cfg.maxClosure,
        )



def softStateReduction(a: Ffa, cfg: ReductionConfig, *, trimStates: bool | None = None) -> ReductionReport:
    """
    Soft state reduction of `a`.

    Trims the automaton, then runs the alternating reduction on it and on its
    reverse. The direct result wins only with strictly fewer states; otherwise
    the reversed run is returned. The result is ε-equivalent to `a` when
    `cfg.k` is None, and ε-equal on words of length ≤ k otherwise.

    `trimStates` overrides `cfg.trim`.

    Raises:
        ClosureCapError: a closure exceeded `cfg.maxClosure`
    """
    token = setLogContext(structure=str(cfg.lattice), eps=cfg.eps, k=cfg.kLabel)
    try:
        _warnIfUnbounded(a, cfg)
        doTrim = cfg.trim if trimStates is None else trimStates
        if doTrim:
            start, kept = trim(a)
        else:
            start, kept = a, tuple(range(a.n))

        report = ReductionReport(result=start, config=cfg, inputStates=a.n, keptStates=kept)
        if doTrim:
            report.recordPhase("trim", start.n)

        direct, _ = softStateReduction0(start, cfg, report, label="direct")
        report.recordPhase("direct", direct.n)
        reversedRun, _ = softStateReduction0(reverse(start), cfg, report, label="reversed")
        viaReverse = reverse(reversedRun)
        report.recordPhase("reversed", viaReverse.n)

        if direct.n < viaReverse.n:
            report.result, report.branch = direct, "direct"
        else:
            report.result, report.branch = viaReverse, "reversed"

        logger.info(
            "reduced %d -> %d states (%s branch, %d iterations, %d closure steps)",
            a.n, report.result.n, report.branch, report.whileLoopIterations, report.closureStepExecutions,
        )
        return report
    finally:
        resetLogContext(token)
