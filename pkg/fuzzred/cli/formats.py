# fuzzred/cli/formats.py
from __future__ import annotations

from collections.abc import Iterator
from enum import Enum

import numpy as np

from fuzzred.automaton import Ffa
from fuzzred.core.errors import ParseError, ValueRangeError
from fuzzred.lattice import asValue

__all__ = ["AutomatonFormat", "formatValue", "parseAutomaton", "serializeAutomaton"]



class AutomatonFormat(str, Enum):
    DENSE = "dense"
    SPARSE = "sparse"



def formatValue(value: float) -> str:
    """12 significant digits, positional notation, trailing zeros trimmed ("0.5", "1", "0.416666666667")."""
    return np.format_float_positional(float(value), precision=12, unique=False, fractional=False, trim="-")



def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """(1-based line number, tokens) of every non-blank, non-comment line."""
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield no, stripped.split()



def _count(token: str, what: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError as err:
        raise ParseError(f"{what} must be a non-negative integer, got {token!r}", line=line) from err
    if value < 0:
        raise ParseError(f"{what} must be a non-negative integer, got {token!r}", line=line)
    return value



def _degree(token: str, what: str, line: int) -> float:
    try:
        float(token)
    except ValueError as err:
        raise ParseError(f"{what} is not a decimal number: {token!r}", line=line) from err
    try:
        return asValue(token, what=what)
    except ValueRangeError as err:
        raise ValueRangeError(f"line {line}: {err}") from err



def _row(tokens: list[str], n: int, what: str, line: int) -> list[float]:
    if len(tokens) != n:
        raise ParseError(f"{what} needs {n} values, got {len(tokens)}", line=line)
    return [_degree(tok, what, line) for tok in tokens]



def _parseDense(text: str) -> Ffa:
    lines = _lines(text)
    try:
        line, header = next(lines)
    except StopIteration:
        raise ParseError("empty input: expected a header line 'n s'") from None
    if len(header) != 2:
        raise ParseError("header must be 'n s'", line=line)
    n = _count(header[0], "state count", line)
    s = _count(header[1], "symbol count", line)
    if s == 0:
        raise ParseError("the alphabet must contain at least one symbol", line=line)

    def take(what: str) -> list[float]:
        try:
            no, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"unexpected end of input while reading {what}") from None
        return _row(tokens, n, what, no)

    initial = take("initial vector") if n else []
    delta = []
    for j in range(s):
        delta.append([take(f"row {q} of transition matrix {j}") for q in range(n)])
    final = take("final vector") if n else []

    extra = next(lines, None)
    if extra is not None:
        raise ParseError("trailing content after the final vector", line=extra[0])
    return Ffa.build(initial, [np.asarray(mat, dtype=np.float64).reshape(n, n) for mat in delta], final)



def _index(token: str, bound: int, what: str, line: int) -> int:
    value = _count(token, what, line)
    if value >= bound:
        raise ParseError(f"{what} {value} out of range 0..{bound - 1}", line=line)
    return value



def _parseSparse(text: str) -> Ffa:
    n: int | None = None
    s: int | None = None
    initial = final = None
    delta: np.ndarray | None = None
    seen: set[tuple] = set()

    def ready(line: int) -> None:
        nonlocal initial, final, delta
        if n is None or s is None:
            raise ParseError("'states' and 'symbols' must precede the entries", line=line)
        if delta is None:
            initial, final = np.zeros(n), np.zeros(n)
            delta = np.zeros((s, n, n))

    for line, tokens in _lines(text):
        tag, args = tokens[0], tokens[1:]
        arity = {"states": 1, "symbols": 1, "initial": 2, "final": 2, "trans": 4}.get(tag)
        if arity is None:
            raise ParseError(f"unknown line tag {tag!r}", line=line)
        if len(args) != arity:
            raise ParseError(f"'{tag}' takes {arity} arguments, got {len(args)}", line=line)

        if tag in ("states", "symbols"):
            if delta is not None or (n if tag == "states" else s) is not None:
                raise ParseError(f"duplicate or late '{tag}' header", line=line)
            if tag == "states":
                n = _count(args[0], "state count", line)
            else:
                s = _count(args[0], "symbol count", line)
                if s == 0:
                    raise ParseError("the alphabet must contain at least one symbol", line=line)
            continue

        ready(line)
        assert n is not None and s is not None and delta is not None
        if tag == "trans":
            key = (tag, _index(args[0], n, "state", line), _index(args[1], s, "symbol", line), _index(args[2], n, "state", line))
        else:
            key = (tag, _index(args[0], n, "state", line))
        if key in seen:
            raise ParseError(f"duplicate entry {' '.join(tokens[:-1])}", line=line)
        seen.add(key)
        value = _degree(args[-1], f"{tag} degree", line)
        if tag == "initial":
            initial[key[1]] = value
        elif tag == "final":
            final[key[1]] = value
        else:
            delta[key[2], key[1], key[3]] = value

    if n is None or s is None:
        raise ParseError("sparse input needs 'states n' and 'symbols s' headers")
    ready(0)
    return Ffa.build(initial, list(delta), final)



def parseAutomaton(text: str, fmt: AutomatonFormat | str = AutomatonFormat.DENSE) -> Ffa:
    """
    Reads an automaton in the dense or sparse text format.

    Dense: `n s`, the n initial degrees, s blocks of n rows of n degrees (one
    block per symbol), the n final degrees. Sparse: `states n`, `symbols s`,
    then `initial q v`, `final q v` and `trans q j p v` lines; unmentioned
    entries are 0. Lines starting with `#` are comments in both.

    Raises:
        ParseError: malformed text (message carries the line number)
        ValueRangeError: a degree outside [0,1]
    """
    if AutomatonFormat(fmt) is AutomatonFormat.SPARSE:
        return _parseSparse(text)
    return _parseDense(text)



def serializeAutomaton(a: Ffa, fmt: AutomatonFormat | str = AutomatonFormat.DENSE) -> str:
    """Text form readable by `parseAutomaton`; ends with a newline."""
    if AutomatonFormat(fmt) is AutomatonFormat.SPARSE:
        out = [f"states {a.n}", f"symbols {a.s}"]
        out += [f"initial {q} {formatValue(v)}" for q, v in enumerate(a.initial) if v > 0.0]
        for j, mat in enumerate(a.delta):
            out += [f"trans {q} {j} {p} {formatValue(mat[q, p])}" for q, p in zip(*np.nonzero(mat))]
        out += [f"final {q} {formatValue(v)}" for q, v in enumerate(a.final) if v > 0.0]
        return "\n".join(out) + "\n"

    def row(values) -> str:
        return " ".join(formatValue(v) for v in values)

    out = [f"{a.n} {a.s}"]
    if a.n:
        out.append(row(a.initial))
        for mat in a.delta:
            out += [row(r) for r in mat]
        out.append(row(a.final))
    return "\n".join(out) + "\n"
