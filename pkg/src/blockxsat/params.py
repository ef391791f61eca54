"""Closed-form parameter laws for (m, l, lambda) designs and regular formulas.

Everything is exact rational arithmetic.  Integrality is reported, never
assumed.  Naming: ``m`` points/clauses, ``l`` block size/variable
occurrence, ``lam`` pair multiplicity, ``k`` replication/clause width,
``n`` number of blocks/variables.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import DegenerateParams, NotLinear, NotRegular
from .structure import FormulaView


class Tri(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_COVERED = "not-covered"

    @classmethod
    def of(cls, flag: bool) -> Tri:
        return cls.HOLDS if flag else cls.FAILS


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def derive_k(m: int, l: int, lam: int) -> Fraction:
    """Replication number from ``lam * (m - 1) == k * (l - 1)``."""
    if l < 2:
        raise DegenerateParams(f"block size l={l} must be at least 2")
    if m <= l:
        raise DegenerateParams(f"need l < m, got m={m}, l={l}")
    if lam < 1:
        raise DegenerateParams(f"lambda={lam} must be at least 1")
    return Fraction(lam * (m - 1), l - 1)


def derive_n(m: int, l: int, k: int | Fraction) -> Fraction:
    """Number of blocks from ``n * l == m * k``."""
    if l == 0:
        raise DegenerateParams("block size l=0")
    return Fraction(m) * Fraction(k) / l


def sts_condition(m: int) -> bool:
    """A Steiner triple system on ``m`` points exists iff m = 1 or 3 (mod 6)."""
    return m % 6 in (1, 3)


def resolvable_condition(m: int, l: int) -> Tri:
    """Existence of a resolvable (m, l, 1) design; only known here for l = 3, 4."""
    if l not in (3, 4):
        return Tri.NOT_COVERED
    return Tri.of(m % (l * (l - 1)) == l)


@dataclass(frozen=True)
class DesignParams:
    """Parameters of a (possibly partial) (m, l, lam) design.

    ``k`` and ``n`` are the values the balance laws would force; for a
    partial design they need not match what is measured.  ``alpha`` is m/l
    when that is an integer, the size of any parallel class.
    """

    m: int
    l: int
    lam: int
    balanced: bool = True

    @property
    def k(self) -> Fraction | None:
        if self.l < 2:
            return None
        return Fraction(self.lam * (self.m - 1), self.l - 1)

    @property
    def n(self) -> Fraction | None:
        k = self.k
        return None if k is None else derive_n(self.m, self.l, k)

    @property
    def alpha(self) -> int | None:
        return self.m // self.l if self.l and self.m % self.l == 0 else None


@dataclass(frozen=True)
class AdmissibilityReport:
    m: int
    l: int
    lam: int
    k: Fraction
    n: Fraction
    k_integral: bool
    n_integral: bool
    fisher_ok: bool
    k_ge_l: bool
    xsat_necessary: bool
    resolvable_condition: Tri
    sts_exists: Tri

    @property
    def admissible(self) -> bool:
        """The necessary conditions for a balanced design to exist at all."""
        return self.k_integral and self.n_integral and self.fisher_ok and self.k_ge_l

    def to_dict(self) -> dict:
        d = asdict(self)
        d["k"] = _frac_json(self.k)
        d["n"] = _frac_json(self.n)
        d["resolvable_condition"] = self.resolvable_condition.value
        d["sts_exists"] = self.sts_exists.value
        d["admissible"] = self.admissible
        return d


def _frac_json(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def admissibility(m: int, l: int, lam: int) -> AdmissibilityReport:
    k = derive_k(m, l, lam)
    n = derive_n(m, l, k)
    single = lam == 1
    return AdmissibilityReport(
        m=m,
        l=l,
        lam=lam,
        k=k,
        n=n,
        k_integral=_is_int(k),
        n_integral=_is_int(n),
        fisher_ok=n >= m,
        k_ge_l=k >= l,
        # a parallel class splits the m points into blocks of size l
        xsat_necessary=m % l == 0,
        resolvable_condition=resolvable_condition(m, l) if single else Tri.NOT_COVERED,
        sts_exists=Tri.of(sts_condition(m)) if single and l == 3 else Tri.NOT_COVERED,
    )


def independent_count_closed_form(l: int, k: int) -> Fraction:
    return Fraction((l - 1) * (k - l) * (k - 1), l)


def independent_count(n: int, l: int, k: int) -> int:
    """Number of variables sharing no clause with a given variable.

    Valid for exact linear l-regular formulas.  A warning is emitted when the
    two closed forms disagree, which only happens for parameters that do not
    come from a real (m, l, 1) design.
    """
    v = n - 1 - l * (k - 1)
    other = independent_count_closed_form(l, k)
    if other != v:
        warnings.warn(
            f"independent-count forms disagree for n={n}, l={l}, k={k}: {v} vs {other}",
            stacklevel=2,
        )
    return v


@dataclass(frozen=True)
class MeanIdentityReport:
    m: int
    n: int
    l: int
    mean_width: Fraction
    mean_disconnection: Fraction
    clause_count_ok: bool
    incidence_count_ok: bool

    @property
    def ok(self) -> bool:
        return self.clause_count_ok and self.incidence_count_ok


def mean_identity_check(f: FormulaView) -> MeanIdentityReport:
    """Check ``m == 1 + kbar*(l-1) + dbar`` and ``n*l == m*kbar`` on a formula.

    ``kbar`` is the mean clause width and ``dbar`` the mean number of clauses
    disjoint from a clause.  Requires an l-regular linear formula.
    """
    s = f.structure
    occ = set(s.col_sums())
    if len(occ) != 1:
        raise NotRegular(f"variable occurrences differ: {sorted(occ)}")
    (l,) = occ
    rows = s.row_masks
    for a in range(s.m):
        for b in range(a + 1, s.m):
            if (rows[a] & rows[b]).bit_count() > 1:
                raise NotLinear(f"clauses {a} and {b} share more than one variable")
    kbar = f.mean_width
    dbar = f.mean_disconnection
    return MeanIdentityReport(
        m=s.m,
        n=s.n,
        l=l,
        mean_width=kbar,
        mean_disconnection=dbar,
        clause_count_ok=s.m == 1 + kbar * (l - 1) + dbar,
        incidence_count_ok=s.n * l == s.m * kbar,
    )
