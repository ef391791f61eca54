import pytest

from blockxsat.errors import InstanceTooLarge
from blockxsat.generators import catalog, sts
from blockxsat.oracle import brute_force_xsat
from blockxsat.structure import FormulaView, build_structure

from oracles import subset_xsat


def chosen(sols):
    return [s.chosen for s in sols]


def test_empty_formula_has_empty_solution():
    sols = brute_force_xsat(FormulaView(build_structure([], 0)))
    assert chosen(sols) == [()]


def test_empty_clause_has_no_solution():
    assert brute_force_xsat(FormulaView(build_structure([{0}, set()], 1))) == []


def test_single_clause():
    assert chosen(brute_force_xsat(FormulaView(build_structure([{0}], 1)))) == [(0,)]


@pytest.mark.parametrize("name", ["fano", "ag2_3", "pg2_3", "complete_triangle"])
def test_matches_subset_enumeration(name):
    s = catalog(name)
    assert chosen(brute_force_xsat(FormulaView(s))) == sorted(subset_xsat(s.cols(), s.m))


def test_ag2_3_frozen():
    # the four parallel classes, found by enumerating all 2^12 column subsets
    assert chosen(brute_force_xsat(FormulaView(catalog("ag2_3")))) == [
        (0, 10, 11), (1, 5, 9), (2, 6, 7), (3, 4, 8)
    ]


def test_limit():
    assert len(brute_force_xsat(FormulaView(catalog("ag2_3")), limit=2)) == 2


def test_too_large():
    with pytest.raises(InstanceTooLarge):
        brute_force_xsat(FormulaView(sts(31)))
