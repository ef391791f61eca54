"""Class membership of incidence structures and formula <-> design conversion.

The conversions never touch the matrix: a design built from an l-regular
formula has the clauses as points and each variable's occurrence set as a
block, which is exactly the same 0/1 matrix read column-wise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParams, NonUniformBlocks, NotRegular, PreconditionNotMet
from .params import DesignParams
from .structure import DesignView, FormulaView, IncidenceStructure


@dataclass(frozen=True)
class StructureClass:
    occurrence_profile: tuple[int, ...]
    width_profile: tuple[int, ...]
    regular_l: int | None
    uniform_k: int | None
    lambda_max: int
    lambda_exact: bool

    @property
    def is_linear(self) -> bool:
        return self.lambda_max <= 1

    @property
    def is_exact_linear(self) -> bool:
        return self.lambda_exact and self.lambda_max == 1

    def to_dict(self) -> dict:
        return {
            "occurrence_profile": dict(sorted(Counter(self.occurrence_profile).items())),
            "width_profile": dict(sorted(Counter(self.width_profile).items())),
            "regular_l": self.regular_l,
            "uniform_k": self.uniform_k,
            "lambda_max": self.lambda_max,
            "lambda_exact": self.lambda_exact,
            "is_linear": self.is_linear,
            "is_exact_linear": self.is_exact_linear,
        }


def _common(values: list[int]) -> int | None:
    if values and all(v == values[0] for v in values):
        return values[0]
    return None


def pair_meets(s: IncidenceStructure) -> list[int]:
    """Sizes of all row-pair intersections, in (a, b) a < b order."""
    rows = s.row_masks
    return [(rows[a] & rows[b]).bit_count() for a in range(s.m) for b in range(a + 1, s.m)]


def classify(s: IncidenceStructure) -> StructureClass:
    """Measure the profile, regularity, uniformity and pair multiplicity of ``s``.

    With fewer than two rows there are no pairs: ``lambda_max`` is 0 and
    ``lambda_exact`` holds vacuously.
    """
    col_sums = s.col_sums()
    row_sums = s.row_sums()
    meets = pair_meets(s)
    lam = max(meets, default=0)
    return StructureClass(
        occurrence_profile=tuple(sorted(col_sums)),
        width_profile=tuple(sorted(row_sums)),
        regular_l=_common(col_sums),
        uniform_k=_common(row_sums),
        lambda_max=lam,
        lambda_exact=all(x == lam for x in meets),
    )


def formula_to_design(
    f: FormulaView, lam: int | None = None
) -> tuple[DesignView, DesignParams]:
    """Read an l-regular formula as a partial (m, l, lam) design.

    ``lam`` defaults to the measured maximum pair meet; a user bound must be
    at least that.  The design is flagged balanced when every clause pair
    meets in exactly ``lam`` variables.
    """
    cls = classify(f.structure)
    if cls.regular_l is None:
        raise NotRegular(
            f"variable occurrences differ: {sorted(set(cls.occurrence_profile))}"
        )
    if lam is None:
        lam = cls.lambda_max
    elif lam < cls.lambda_max:
        raise PreconditionNotMet(
            f"requested lambda={lam} below measured maximum {cls.lambda_max}"
        )
    l = cls.regular_l
    if l >= f.m:
        raise DegenerateParams(f"a design needs block size l={l} < m={f.m}")
    balanced = cls.lambda_exact and cls.lambda_max == lam
    return DesignView(f.structure), DesignParams(f.m, l, lam, balanced=balanced)


def design_to_formula(d: DesignView) -> FormulaView:
    sizes = d.structure.col_sums()
    if len(set(sizes)) > 1:
        raise NonUniformBlocks(f"block sizes differ: {sorted(set(sizes))}")
    return FormulaView(d.structure)


@dataclass(frozen=True)
class UniformityVerdict:
    holds: bool
    k: int | None
    counterexample: tuple[int, int] | None = None


def verify_uniformity(s: IncidenceStructure) -> UniformityVerdict:
    """Check that an exact-lambda l-regular structure is k-uniform with the forced k.

    The returned ``k`` is the measured common row width.  A counterexample is
    a pair of rows whose widths differ from each other or from
    ``lambda*(m-1)/(l-1)``; seeing one means a bug, not a mathematical failure.
    """
    cls = classify(s)
    if cls.regular_l is None or not cls.lambda_exact:
        raise PreconditionNotMet("structure must be regular with exact pair multiplicity")
    if cls.regular_l < 2 or s.m < 2:
        raise PreconditionNotMet("need l >= 2 and at least two rows")
    forced = Fraction(cls.lambda_max * (s.m - 1), cls.regular_l - 1)
    widths = s.row_sums()
    for i, w in enumerate(widths):
        if w != forced:
            other = next((j for j, x in enumerate(widths) if x != w), 0 if i else 1)
            return UniformityVerdict(False, None, (i, other))
    return UniformityVerdict(True, widths[0])
