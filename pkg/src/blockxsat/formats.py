"""Text formats: monotone DIMACS CNF for formulas, a line format for designs.

Both formats are 1-based; structures are 0-based.  Design file layout::

    c optional comment
    design <m> <n> [<l> <lambda>]
    <1-based points of block 1, ascending>
    ...

one line per block.  The optional ``l lambda`` trailer must agree with the
measured block size and maximum pair multiplicity.
"""

from __future__ import annotations

from typing import Iterator

from .correspondence import classify
from .errors import (
    BlockXsatError,
    CountMismatch,
    DuplicateLiteral,
    MeasurementMismatch,
    NegativeLiteral,
    ParseError,
    UnusedVariable,
)
from .structure import DesignView, FormulaView, build_structure, from_blocks


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def read_dimacs(text: str, *, simple: bool = False) -> FormulaView:
    """Parse monotone DIMACS CNF.

    Clauses may span lines; each ends at a ``0``.  Formulas may contain
    variables with identical occurrence sets, so ``simple`` defaults off.
    """
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    seen: set[int] = set()
    for lineno, toks in _content_lines(text):
        if toks[0] == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(toks) != 4 or toks[1] != "cnf":
                raise ParseError("problem line must be 'p cnf <vars> <clauses>'", lineno)
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative counts in problem line", lineno)
            header = (n, m)
            continue
        if header is None:
            raise ParseError("clause before problem line", lineno)
        n = header[0]
        for tok in toks:
            lit = _int(tok, lineno)
            if lit == 0:
                clauses.append(current)
                current, seen = [], set()
                continue
            if lit < 0:
                raise NegativeLiteral(
                    f"literal {lit}: only monotone (all-positive) formulas are supported",
                    lineno,
                )
            if lit > n:
                raise ParseError(f"variable {lit} exceeds declared count {n}", lineno)
            if lit in seen:
                raise DuplicateLiteral(f"variable {lit} repeated in clause", lineno)
            seen.add(lit)
            current.append(lit - 1)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError("last clause not terminated by 0")
    n, m = header
    if len(clauses) != m:
        raise CountMismatch(f"header declares {m} clauses, found {len(clauses)}")
    used = set().union(*clauses) if clauses else set()
    unused = sorted(set(range(n)) - used)
    if unused:
        raise UnusedVariable(f"variables {[v + 1 for v in unused]} occur in no clause")
    return FormulaView(build_structure(clauses, n, simple=simple))


def write_dimacs(f: FormulaView) -> str:
    s = f.structure
    lines = [f"p cnf {s.n} {s.m}"]
    for i in range(s.m):
        lits = [str(j + 1) for j in sorted(s.row(i))]
        lines.append(" ".join([*lits, "0"]))
    return "\n".join(lines) + "\n"


def read_design(text: str, *, simple: bool = True) -> DesignView:
    header = None
    blocks: list[list[int]] = []
    for lineno, toks in _content_lines(text):
        if header is None:
            if toks[0] != "design" or len(toks) not in (3, 5):
                raise ParseError("header must be 'design <m> <n> [<l> <lambda>]'", lineno)
            header = [_int(t, lineno) for t in toks[1:]]
            if any(v < 0 for v in header):
                raise ParseError("negative values in header", lineno)
            continue
        m = header[0]
        block = []
        for tok in toks:
            p = _int(tok, lineno)
            if not 1 <= p <= m:
                raise ParseError(f"point {p} outside [1, {m}]", lineno)
            block.append(p - 1)
        if len(set(block)) != len(block):
            raise DuplicateLiteral("point repeated in block", lineno)
        blocks.append(sorted(block))
    if header is None:
        raise ParseError("missing design header")
    m, n = header[0], header[1]
    if len(blocks) != n:
        raise CountMismatch(f"header declares {n} blocks, found {len(blocks)}")
    try:
        s = from_blocks(blocks, m, simple=simple)
    except BlockXsatError as exc:
        raise ParseError(str(exc)) from exc
    if len(header) == 4:
        l, lam = header[2], header[3]
        sizes = set(s.col_sums())
        if sizes and sizes != {l}:
            raise MeasurementMismatch(f"declared l={l}, block sizes {sorted(sizes)}")
        measured = classify(s).lambda_max
        if measured != lam:
            raise MeasurementMismatch(f"declared lambda={lam}, measured {measured}")
    return DesignView(s)


def write_design(d: DesignView) -> str:
    s = d.structure
    head = f"design {s.m} {s.n}"
    sizes = set(s.col_sums())
    if len(sizes) == 1:
        head += f" {sizes.pop()} {classify(s).lambda_max}"
    lines = [head]
    for j in range(s.n):
        lines.append(" ".join(str(p + 1) for p in sorted(s.col(j))))
    return "\n".join(lines) + "\n"


def read_any(text: str):
    """Sniff the format from the first content line; returns a FormulaView or DesignView."""
    for _, toks in _content_lines(text):
        if toks[0] == "p":
            return read_dimacs(text)
        if toks[0] == "design":
            return read_design(text)
        break
    raise ParseError("unrecognized format: expected 'p cnf' or 'design' header")
