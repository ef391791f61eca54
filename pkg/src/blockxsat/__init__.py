"""Block designs and exact satisfiability of regular linear monotone CNF formulas.

One 0/1 incidence matrix is read two ways: rows are clauses or points,
columns are variables or blocks.  An XSAT solution of the formula is a
parallel class of the design, found here by exact-cover search.
"""

from .correspondence import (
    StructureClass,
    classify,
    design_to_formula,
    formula_to_design,
    verify_uniformity,
)
from .errors import BlockXsatError
from .formats import read_design, read_dimacs, write_design, write_dimacs
from .generators import bose_sts, catalog, random_partial, skolem_sts, sts
from .oracle import brute_force_xsat
from .params import (
    AdmissibilityReport,
    DesignParams,
    admissibility,
    derive_k,
    derive_n,
    independent_count,
    mean_identity_check,
)
from .solver import (
    ParallelClass,
    Resolution,
    SearchConfig,
    SearchStats,
    XsatSolution,
    enumerate_xsat,
    find_parallel_class,
    find_resolution,
    find_xsat,
    independent_pairs,
)
from .structure import DesignView, FormulaView, IncidenceStructure, build_structure, transpose

__version__ = "0.1.0"
