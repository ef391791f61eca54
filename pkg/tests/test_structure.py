import pytest
from hypothesis import given, strategies as st

from blockxsat.errors import DuplicateColumn, DuplicateIndex, EmptyColumnSupport, IndexOutOfRange
from blockxsat.generators import catalog
from blockxsat.structure import (
    DesignView,
    FormulaView,
    IncidenceStructure,
    bits,
    build_structure,
    from_blocks,
    mask_of,
    transpose,
)

from oracles import pair_coverage


@st.composite
def structures(draw, max_m=8, max_n=8):
    """Arbitrary structures with no empty column (duplicates allowed)."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    rows = [set(draw(st.sets(st.integers(0, n - 1), max_size=n))) for _ in range(m)]
    for j in range(n):
        if not any(j in r for r in rows):
            rows[draw(st.integers(0, m - 1))].add(j)
    return build_structure([sorted(r) for r in rows], n, simple=False)


def test_triangle():
    s = build_structure([{0, 1}, {1, 2}, {0, 2}], 3)
    assert s.to_matrix() == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert s.row_sums() == [2, 2, 2]
    assert s.col_sums() == [2, 2, 2]


def test_single_entry():
    assert build_structure([{0}], 1).to_matrix() == [[1]]


def test_empty_structure_is_allowed():
    s = build_structure([], 0)
    assert (s.m, s.n, s.ones) == (0, 0, 0)


def test_fano_sums():
    s = catalog("fano")
    assert (s.m, s.n) == (7, 7)
    assert s.row_sums() == [3] * 7
    assert s.col_sums() == [3] * 7
    counts = pair_coverage(s.cols())
    assert len(counts) == 21 and set(counts.values()) == {1}


@pytest.mark.parametrize(
    "rows, n, exc",
    [
        ([{0, 3}], 3, IndexOutOfRange),
        ([[0, 0]], 1, DuplicateIndex),
        ([{0}], 2, EmptyColumnSupport),
        ([{0, 1}], 2, DuplicateColumn),
    ],
)
def test_construction_errors(rows, n, exc):
    with pytest.raises(exc):
        build_structure(rows, n)


def test_duplicate_columns_behind_flag():
    s = build_structure([{0, 1}], 2, simple=False)
    assert s.col_masks == (1, 1)


def test_empty_clause_allowed():
    s = build_structure([{0}, set()], 1)
    assert s.row_sums() == [1, 0]


def test_transpose_small():
    s = build_structure([{0}, {0, 1}], 2)
    assert transpose(s).to_matrix() == [[1, 1], [0, 1]]


def test_transpose_fano_self_dual_params():
    t = transpose(catalog("fano"))
    assert t.row_sums() == [3] * 7 and t.col_sums() == [3] * 7


def test_transpose_swaps_labels():
    s = build_structure([{0}, {0, 1}], 2, row_labels=["C1", "C2"], col_labels=["a", "b"])
    t = transpose(s)
    assert t.row_labels == ("a", "b") and t.col_labels == ("C1", "C2")


def test_bits_roundtrip():
    assert bits(mask_of([0, 5, 64])) == [0, 5, 64]
    assert bits(0) == []


@given(structures())
def test_sums_agree(s):
    assert sum(s.row_sums()) == sum(s.col_sums()) == sum(map(sum, s.to_matrix()))


@given(structures())
def test_transpose_involution(s):
    assert transpose(transpose(s)) == s
    t = transpose(s)
    assert all(t.entry(j, i) == s.entry(i, j) for i in range(s.m) for j in range(s.n))


@given(structures())
def test_views_agree(s):
    f, d = FormulaView(s), DesignView(s)
    assert sum(f.clause_width(i) for i in range(s.m)) == sum(d.block_size(j) for j in range(s.n))
    assert all(f.var_occurrence(j) == len(f.occurrences(j)) for j in range(s.n))
    assert all(d.replication(i) == len(d.blocks_through(i)) for i in range(s.m))
    assert all(
        (i in d.block(j)) == bool(s.entry(i, j)) for i in range(s.m) for j in range(s.n)
    )


def test_mean_width_and_disconnection():
    f = FormulaView(build_structure([{0}, {1}], 2))
    assert f.mean_width == 1
    assert f.mean_disconnection == 1
    f = FormulaView(catalog("fano"))
    assert f.mean_width == 3 and f.mean_disconnection == 0


def test_from_blocks_matches_rows():
    s = from_blocks([(0, 1), (1, 2), (0, 2)], 3)
    assert s == build_structure([{0, 2}, {0, 1}, {1, 2}], 3)


def test_structures_are_immutable():
    s = build_structure([{0}], 1)
    with pytest.raises(AttributeError):
        s.m = 3
    assert isinstance(s, IncidenceStructure)


def test_transpose_simple_flag_tracks_repeated_columns():
    s = build_structure([{0, 1}, {0, 1}], 2, simple=False)
    assert not transpose(s).simple
    assert transpose(catalog("fano")).simple
