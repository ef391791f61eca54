"""Exact-cover search for XSAT solutions, parallel classes and resolutions.

A monotone formula is x-satisfiable iff some set of variables has occurrence
sets partitioning the clauses.  That is an exact cover problem with the rows
as universe and the column supports as candidate sets, and a parallel class
of the corresponding design is the same object read as blocks.

The search is Algorithm X on int bitsets: the state is the mask of uncovered
rows plus the mask of columns still compatible with the partial choice.  The
branching row is the uncovered row with the fewest compatible columns, ties
by lowest index.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace
from typing import Iterator

from .correspondence import classify
from .errors import NonUniformBlocks, VerificationError
from .params import independent_count
from .structure import DesignView, FormulaView, IncidenceStructure, bits, mask_of


class ColumnChoice(str, enum.Enum):
    MIN_SUPPORT = "min-support"
    FIRST_INDEX = "first-index"


@dataclass(frozen=True)
class SearchConfig:
    node_limit: int | None = None
    solution_limit: int | None = None
    column_choice: ColumnChoice = ColumnChoice.MIN_SUPPORT
    seed: int | None = None

    def __post_init__(self):
        for name in ("node_limit", "solution_limit"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")
        object.__setattr__(self, "column_choice", ColumnChoice(self.column_choice))


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    solutions_found: int = 0
    limit_hit: bool = False

    def to_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "solutions_found": self.solutions_found,
            "limit_hit": self.limit_hit,
        }


@dataclass(frozen=True, order=True)
class XsatSolution:
    """Chosen columns (ascending) and, per chosen column, its row support."""

    chosen: tuple[int, ...]
    parts: tuple[frozenset[int], ...] = field(compare=False)

    def as_parallel_class(self) -> ParallelClass:
        return ParallelClass(self.chosen, self.parts)


@dataclass(frozen=True, order=True)
class ParallelClass:
    """Pairwise disjoint blocks covering every point."""

    blocks: tuple[int, ...]
    parts: tuple[frozenset[int], ...] = field(compare=False)


@dataclass(frozen=True)
class Resolution:
    classes: tuple[ParallelClass, ...]

    def __len__(self) -> int:
        return len(self.classes)


class _LimitHit(Exception):
    pass


def check_partition(s: IncidenceStructure, chosen) -> tuple[frozenset[int], ...]:
    """Return the row supports of ``chosen`` if they partition the rows.

    Raises VerificationError otherwise.
    """
    covered = 0
    for j in chosen:
        c = s.col_masks[j]
        if covered & c:
            raise VerificationError(f"column {j} overlaps rows already covered")
        covered |= c
    if covered != (1 << s.m) - 1:
        missing = bits(((1 << s.m) - 1) & ~covered)
        raise VerificationError(f"rows {missing} not covered")
    return tuple(s.col(j) for j in chosen)


def _solution(s: IncidenceStructure, chosen) -> XsatSolution:
    chosen = tuple(sorted(chosen))
    return XsatSolution(chosen, check_partition(s, chosen))


class ExactCover:
    """Search state shared by one run; not reusable across threads."""

    def __init__(self, s: IncidenceStructure, cfg: SearchConfig, stats: SearchStats):
        self.s = s
        self.cfg = cfg
        self.stats = stats
        self.rng = random.Random(cfg.seed) if cfg.seed is not None else None
        rows = s.row_masks
        # columns sharing at least one row with column j, j included
        self.conflict = []
        for c in s.col_masks:
            mask = 0
            for r in bits(c):
                mask |= rows[r]
            self.conflict.append(mask)

    def _pick_row(self, uncovered: int, available: int) -> int | None:
        """Candidate mask of the branching row, or None at a dead end."""
        rows = self.s.row_masks
        if self.cfg.column_choice is ColumnChoice.FIRST_INDEX:
            low = uncovered & -uncovered
            cands = rows[low.bit_length() - 1] & available
            return cands or None
        best = None
        best_count = 0
        ties = []
        while uncovered:
            low = uncovered & -uncovered
            uncovered ^= low
            cands = rows[low.bit_length() - 1] & available
            count = cands.bit_count()
            if count == 0:
                return None
            if best is None or count < best_count:
                best, best_count = cands, count
                ties = [cands]
                if count == 1 and self.rng is None:
                    break
            elif count == best_count and self.rng is not None:
                ties.append(cands)
        if self.rng is not None and len(ties) > 1:
            best = self.rng.choice(ties)
        return best

    def covers(self, uncovered: int, available: int) -> Iterator[list[int]]:
        """Yield every list of columns from ``available`` exactly covering ``uncovered``."""
        limit = self.cfg.node_limit
        if limit is not None and self.stats.nodes_expanded >= limit:
            raise _LimitHit
        self.stats.nodes_expanded += 1
        if not uncovered:
            yield []
            return
        cands = self._pick_row(uncovered, available)
        if cands is None:
            return
        order = bits(cands)
        if self.rng is not None:
            self.rng.shuffle(order)
        cols = self.s.col_masks
        for c in order:
            for rest in self.covers(uncovered & ~cols[c], available & ~self.conflict[c]):
                yield [c, *rest]


def _full(k: int) -> int:
    return (1 << k) - 1


def enumerate_xsat(
    f: FormulaView, cfg: SearchConfig | None = None
) -> tuple[list[XsatSolution], SearchStats]:
    """All XSAT solutions up to ``cfg.solution_limit``, sorted by chosen columns.

    When ``stats.limit_hit`` is set the list may be incomplete.
    """
    cfg = cfg or SearchConfig()
    s = f.structure
    stats = SearchStats()
    search = ExactCover(s, cfg, stats)
    found = []
    try:
        for chosen in search.covers(_full(s.m), _full(s.n)):
            found.append(_solution(s, chosen))
            stats.solutions_found += 1
            if cfg.solution_limit is not None and len(found) >= cfg.solution_limit:
                break
    except _LimitHit:
        stats.limit_hit = True
    found.sort()
    return found, stats


def find_xsat(
    f: FormulaView, cfg: SearchConfig | None = None
) -> tuple[XsatSolution | None, SearchStats]:
    """First XSAT solution, or None.

    None with ``stats.limit_hit`` unset means the formula is not
    x-satisfiable; with it set the answer is unknown.
    """
    cfg = cfg or SearchConfig()
    found, stats = enumerate_xsat(f, replace(cfg, solution_limit=1))
    return (found[0] if found else None), stats


def find_parallel_class(
    d: DesignView, cfg: SearchConfig | None = None
) -> tuple[ParallelClass | None, SearchStats]:
    sol, stats = find_xsat(FormulaView(d.structure), cfg)
    return (sol.as_parallel_class() if sol else None), stats


def check_resolution(s: IncidenceStructure, classes) -> None:
    """Raise VerificationError unless ``classes`` partition the columns into parallel classes."""
    used = 0
    for blocks in classes:
        check_partition(s, blocks)
        m = mask_of(blocks)
        if used & m:
            raise VerificationError("parallel classes share a block")
        used |= m
    if used != _full(s.n):
        raise VerificationError(f"blocks {bits(_full(s.n) & ~used)} in no class")


def find_resolution(
    d: DesignView, cfg: SearchConfig | None = None
) -> tuple[Resolution | None, SearchStats]:
    """Partition all blocks into parallel classes, or report that none exists.

    Each level forces the lowest-indexed unused block into the next class,
    which is complete (that block must lie in some class) and removes the
    ordering symmetry among classes.
    """
    cfg = cfg or SearchConfig()
    s = d.structure
    if len(set(s.col_sums())) > 1:
        raise NonUniformBlocks(f"block sizes differ: {sorted(set(s.col_sums()))}")
    stats = SearchStats()
    search = ExactCover(s, cfg, stats)
    all_rows = _full(s.m)

    def resolve(unused: int) -> Iterator[list[list[int]]]:
        if not unused:
            yield []
            return
        low = unused & -unused
        c = low.bit_length() - 1
        for rest in search.covers(all_rows & ~s.col_masks[c], unused & ~search.conflict[c]):
            cls = sorted([c, *rest])
            for more in resolve(unused & ~mask_of(cls)):
                yield [cls, *more]

    found = None
    try:
        found = next(resolve(_full(s.n)), None)
    except _LimitHit:
        stats.limit_hit = True
    if found is None:
        return None, stats
    check_resolution(s, found)
    stats.solutions_found = 1
    classes = tuple(ParallelClass(tuple(c), check_partition(s, c)) for c in found)
    return Resolution(classes), stats


@dataclass(frozen=True)
class IndependentPairsReport:
    counts: tuple[int, ...]
    expected: int | None
    verdict: bool | None

    def to_dict(self) -> dict:
        return {"counts": list(self.counts), "expected": self.expected, "verdict": self.verdict}


def independent_pairs(f: FormulaView) -> IndependentPairsReport:
    """For each variable, how many other variables share no clause with it.

    ``expected`` is the closed-form count when the formula is exact linear,
    regular and uniform; ``verdict`` says whether every count matches it.
    """
    cols = f.structure.col_masks
    counts = tuple(
        sum(1 for b, other in enumerate(cols) if b != a and not c & other)
        for a, c in enumerate(cols)
    )
    cls = classify(f.structure)
    if cls.is_exact_linear and cls.regular_l is not None and cls.uniform_k is not None:
        expected = independent_count(f.n, cls.regular_l, cls.uniform_k)
        return IndependentPairsReport(counts, expected, all(x == expected for x in counts))
    return IndependentPairsReport(counts, None, None)
