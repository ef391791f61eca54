"""Incidence structures and the two views (formula, design) over them.

An :class:`IncidenceStructure` is an ``m x n`` 0/1 matrix.  Rows are clauses
of a monotone CNF formula, or equivalently points of a block design; columns
are variables, or equivalently blocks.  The matrix is stored twice as Python
int bitsets: one mask per row (over columns) and one mask per column (over
rows), since the exact-cover search walks both directions.

All indices are 0-based here.  The file formats and the CLI convert to and
from 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicateColumn, DuplicateIndex, EmptyColumnSupport, IndexOutOfRange


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class IncidenceStructure:
    """Immutable 0/1 incidence matrix with row and column bitset indexes.

    Use :func:`build_structure` rather than calling the constructor directly;
    it performs the validation.  Equality is entrywise; ``simple`` and the
    labels do not take part.
    """

    m: int
    n: int
    row_masks: tuple[int, ...]
    col_masks: tuple[int, ...]
    simple: bool = field(default=True, compare=False)
    row_labels: tuple[str, ...] | None = field(default=None, compare=False)
    col_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def entry(self, i: int, j: int) -> int:
        return (self.row_masks[i] >> j) & 1

    def row(self, i: int) -> frozenset[int]:
        return frozenset(bits(self.row_masks[i]))

    def col(self, j: int) -> frozenset[int]:
        return frozenset(bits(self.col_masks[j]))

    def rows(self) -> list[frozenset[int]]:
        return [self.row(i) for i in range(self.m)]

    def cols(self) -> list[frozenset[int]]:
        return [self.col(j) for j in range(self.n)]

    def row_sums(self) -> list[int]:
        return [r.bit_count() for r in self.row_masks]

    def col_sums(self) -> list[int]:
        return [c.bit_count() for c in self.col_masks]

    @property
    def ones(self) -> int:
        return sum(self.row_sums())

    def to_matrix(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.m)]

    def same_entries(self, other: IncidenceStructure) -> bool:
        return (self.m, self.n, self.row_masks) == (other.m, other.n, other.row_masks)

    def __repr__(self) -> str:
        return f"IncidenceStructure(m={self.m}, n={self.n}, ones={self.ones})"


def build_structure(
    rows: Sequence[Iterable[int]],
    n: int,
    *,
    simple: bool = True,
    row_labels: Sequence[str] | None = None,
    col_labels: Sequence[str] | None = None,
) -> IncidenceStructure:
    """Build a structure from 0-based column-index sets, one per row.

    Raises:
        IndexOutOfRange: an index outside ``[0, n)``.
        DuplicateIndex: the same column listed twice in one row.
        EmptyColumnSupport: some column appears in no row.
        DuplicateColumn: two equal columns while ``simple`` is set.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative column count {n}")
    row_masks = []
    col_masks = [0] * n
    for i, row in enumerate(rows):
        mask = 0
        for j in row:
            if not 0 <= j < n:
                raise IndexOutOfRange(f"row {i}: column index {j} outside [0, {n})")
            if mask >> j & 1:
                raise DuplicateIndex(f"row {i}: column index {j} repeated")
            mask |= 1 << j
            col_masks[j] |= 1 << i
        row_masks.append(mask)

    for j, c in enumerate(col_masks):
        if not c:
            raise EmptyColumnSupport(f"column {j} has empty support")
    if simple:
        seen: dict[int, int] = {}
        for j, c in enumerate(col_masks):
            if c in seen:
                raise DuplicateColumn(f"columns {seen[c]} and {j} have equal support")
            seen[c] = j

    m = len(row_masks)
    if row_labels is not None and len(row_labels) != m:
        raise IndexOutOfRange("row_labels length differs from row count")
    if col_labels is not None and len(col_labels) != n:
        raise IndexOutOfRange("col_labels length differs from column count")
    return IncidenceStructure(
        m=m,
        n=n,
        row_masks=tuple(row_masks),
        col_masks=tuple(col_masks),
        simple=simple,
        row_labels=tuple(row_labels) if row_labels is not None else None,
        col_labels=tuple(col_labels) if col_labels is not None else None,
    )


def from_blocks(
    blocks: Sequence[Iterable[int]], m: int, *, simple: bool = True
) -> IncidenceStructure:
    """Build a structure from the design side: ``blocks`` are 0-based point sets."""
    rows: list[list[int]] = [[] for _ in range(m)]
    for j, block in enumerate(blocks):
        for p in block:
            if not 0 <= p < m:
                raise IndexOutOfRange(f"block {j}: point {p} outside [0, {m})")
            rows[p].append(j)
    return build_structure(rows, len(blocks), simple=simple)


def transpose(s: IncidenceStructure) -> IncidenceStructure:
    # The transpose of a structure with an empty row has an empty column, so
    # this bypasses build_structure's support check on purpose.
    return IncidenceStructure(
        m=s.n,
        n=s.m,
        row_masks=s.col_masks,
        col_masks=s.row_masks,
        simple=len(set(s.row_masks)) == s.m,
        row_labels=s.col_labels,
        col_labels=s.row_labels,
    )


@dataclass(frozen=True)
class FormulaView:
    """Rows as clauses, columns as variables."""

    structure: IncidenceStructure

    @property
    def m(self) -> int:
        return self.structure.m

    @property
    def n(self) -> int:
        return self.structure.n

    def clause(self, i: int) -> frozenset[int]:
        return self.structure.row(i)

    def clauses(self) -> list[frozenset[int]]:
        return self.structure.rows()

    def occurrences(self, j: int) -> frozenset[int]:
        """The set of clauses containing variable ``j``."""
        return self.structure.col(j)

    def var_occurrence(self, j: int) -> int:
        return self.structure.col_masks[j].bit_count()

    def clause_width(self, i: int) -> int:
        return self.structure.row_masks[i].bit_count()

    @property
    def mean_width(self) -> Fraction:
        if self.m == 0:
            return Fraction(0)
        return Fraction(self.structure.ones, self.m)

    @property
    def mean_disconnection(self) -> Fraction:
        """Mean, over clauses, of how many other clauses share no variable with it."""
        rows = self.structure.row_masks
        m = len(rows)
        if m == 0:
            return Fraction(0)
        disjoint_pairs = sum(
            1 for a in range(m) for b in range(a + 1, m) if not rows[a] & rows[b]
        )
        return Fraction(2 * disjoint_pairs, m)


@dataclass(frozen=True)
class DesignView:
    """Rows as points, columns as blocks."""

    structure: IncidenceStructure

    @property
    def m(self) -> int:
        return self.structure.m

    @property
    def n(self) -> int:
        return self.structure.n

    def block(self, j: int) -> frozenset[int]:
        return self.structure.col(j)

    def blocks(self) -> list[frozenset[int]]:
        return self.structure.cols()

    def blocks_through(self, i: int) -> frozenset[int]:
        """The set of blocks containing point ``i``."""
        return self.structure.row(i)

    def block_size(self, j: int) -> int:
        return self.structure.col_masks[j].bit_count()

    def replication(self, i: int) -> int:
        return self.structure.row_masks[i].bit_count()
