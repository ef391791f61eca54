"""Brute-force XSAT enumeration used to certify the exact-cover engine.

Deliberately naive and sharing no search code with :mod:`.solver`: plain
Python sets, always branching on the lowest uncovered clause.
"""

from __future__ import annotations

from .errors import InstanceTooLarge
from .solver import XsatSolution
from .structure import FormulaView

MAX_ROWS = 28


def brute_force_xsat(f: FormulaView, limit: int | None = None) -> list[XsatSolution]:
    """Every XSAT solution of ``f`` (at most ``limit``), sorted by chosen columns."""
    if f.m > MAX_ROWS:
        raise InstanceTooLarge(f"brute force limited to {MAX_ROWS} clauses, got {f.m}")
    clauses = [sorted(f.clause(i)) for i in range(f.m)]
    occ = [set(f.occurrences(j)) for j in range(f.n)]
    found: list[list[int]] = []

    def dfs(covered: set[int], chosen: list[int]) -> None:
        if limit is not None and len(found) >= limit:
            return
        if len(covered) == f.m:
            found.append(sorted(chosen))
            return
        i = next(r for r in range(f.m) if r not in covered)
        for j in clauses[i]:
            if occ[j].isdisjoint(covered):
                dfs(covered | occ[j], chosen + [j])

    dfs(set(), [])
    found.sort()
    return [
        XsatSolution(tuple(ch), tuple(frozenset(occ[j]) for j in ch)) for ch in found
    ]
