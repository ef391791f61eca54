import pytest

from blockxsat.errors import (
    CountMismatch,
    DuplicateLiteral,
    MeasurementMismatch,
    NegativeLiteral,
    ParseError,
    UnusedVariable,
)
from blockxsat.formats import read_any, read_design, read_dimacs, write_design, write_dimacs
from blockxsat.generators import catalog
from blockxsat.structure import DesignView, FormulaView, build_structure

from oracles import corpus


def test_read_dimacs_basic():
    f = read_dimacs("p cnf 3 2\n1 2 0\n2 3 0\n")
    assert (f.m, f.n) == (2, 3)
    assert f.clauses() == [frozenset({0, 1}), frozenset({1, 2})]


def test_read_dimacs_comments_and_whitespace():
    f = read_dimacs("c hello\np cnf 2 2  \n1 \n 2 0\n2 0\n")
    assert f.clauses() == [frozenset({0, 1}), frozenset({1})]


def test_negative_literal():
    with pytest.raises(NegativeLiteral) as exc:
        read_dimacs("p cnf 2 1\n1 -2 0\n")
    assert exc.value.line == 2
    assert "monotone" in str(exc.value)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("p cnf 2 2\n1 2 0\n", CountMismatch),
        ("p cnf 3 1\n1 2 0\n", UnusedVariable),
        ("p cnf 2 1\n1 1 0\n", DuplicateLiteral),
        ("p cnf 2 1\n1 x 0\n", ParseError),
        ("1 2 0\n", ParseError),
        ("p cnf 2 1\n1 2\n", ParseError),
        ("p cnf 2 1\n1 3 0\n", ParseError),
        ("p sat 2 1\n1 2 0\n", ParseError),
        ("", ParseError),
    ],
)
def test_dimacs_errors(text, exc):
    with pytest.raises(exc):
        read_dimacs(text)


def test_write_dimacs_canonical():
    f = FormulaView(build_structure([{2, 0}, {1}], 3, simple=False))
    assert write_dimacs(f) == "p cnf 3 2\n1 3 0\n2 0\n"


def test_empty_clause_round_trip():
    f = FormulaView(build_structure([{0}, set()], 1))
    text = write_dimacs(f)
    assert text == "p cnf 1 2\n1 0\n0\n"
    assert read_dimacs(text).structure.same_entries(f.structure)


def test_fano_dimacs_round_trip():
    s = catalog("fano")
    assert read_dimacs(write_dimacs(FormulaView(s))).structure.same_entries(s)


def test_read_design_triangle():
    d = read_design("design 3 3\n1 2\n2 3\n1 3\n")
    assert d.structure == catalog("complete_triangle")


def test_read_design_unsorted_block():
    d = read_design("design 3 1\n3 1\n")
    assert d.block(0) == frozenset({0, 2})


@pytest.mark.parametrize(
    "text, exc",
    [
        ("design 3 2\n1 2\n", CountMismatch),
        ("design 3 1\n1 4\n", ParseError),
        ("design 3 1\n1 1\n", DuplicateLiteral),
        ("design 3 3 2 1\n1 2\n2 3\n1 2 3\n", MeasurementMismatch),
        ("design 3 3 2 2\n1 2\n2 3\n1 3\n", MeasurementMismatch),
        ("design 3 2\n1 2\n2 1\n", ParseError),
        ("blocks 3 1\n1 2\n", ParseError),
        ("c only a comment\n", ParseError),
    ],
)
def test_design_errors(text, exc):
    with pytest.raises(exc):
        read_design(text)


def test_repeated_blocks_behind_flag():
    d = read_design("design 3 2\n1 2\n2 1\n", simple=False)
    assert d.n == 2


def test_write_design_trailer():
    text = write_design(DesignView(catalog("ag2_3")))
    assert text.splitlines()[0] == "design 9 12 3 1"
    assert text.splitlines()[1] == "1 2 3"
    text = write_design(DesignView(build_structure([{0, 1}, {0}], 2)))
    assert text.splitlines()[0] == "design 2 2"


def test_ag2_3_design_round_trip():
    s = catalog("ag2_3")
    assert read_design(write_design(DesignView(s))).structure.same_entries(s)


@pytest.mark.parametrize("name, s", corpus(40), ids=lambda x: x if isinstance(x, str) else "")
def test_corpus_round_trips(name, s):
    assert read_dimacs(write_dimacs(FormulaView(s))).structure.same_entries(s)
    assert read_design(write_design(DesignView(s))).structure.same_entries(s)


def test_read_any():
    assert isinstance(read_any("c x\np cnf 1 1\n1 0\n"), FormulaView)
    assert isinstance(read_any("design 3 1\n1 2 3\n"), DesignView)
    with pytest.raises(ParseError):
        read_any("hello\n")
