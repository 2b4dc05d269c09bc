import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import WORKED_C, WORKED_H, WORKED_T
from hooktab.filling import (BoundMismatch, ContentTabloid, Filling, FillingError, HookTabloid,
                             InvalidFilling, NotRectangular, PlanePartition, SemistandardTableau,
                             norm, pp_to_ssyt, ssyt_to_pp, validate, violations)
from hooktab.shape import Cell, Partition, rectangle


def brute_grids(shape, lo, hi):
    cells = [(i, j) for i, p in enumerate(shape.parts, 1) for j in range(1, p + 1)]
    for vals in itertools.product(range(lo, hi + 1), repeat=len(cells)):
        rows, k = [], 0
        for p in shape.parts:
            rows.append(vals[k:k + p])
            k += p
        yield Filling(shape, rows)


def is_ssyt(f):
    r = f.rows
    return (all(a <= b for row in r for a, b in zip(row, row[1:]))
            and all(r[i][j] < r[i + 1][j] for i in range(len(r) - 1) for j in range(len(r[i + 1]))))


def is_pp(f):
    r = f.rows
    return (all(a >= b for row in r for a, b in zip(row, row[1:]))
            and all(r[i][j] >= r[i + 1][j] for i in range(len(r) - 1) for j in range(len(r[i + 1]))))


def test_norms_of_worked_example():
    assert norm(Filling.from_rows(WORKED_C)) == 46
    assert norm(Filling.from_rows(WORKED_T)) == 48
    assert norm(Filling.from_rows(WORKED_H)) == -2
    assert norm(Filling.zeros(Partition((3, 2)))) == 0


def test_worked_example_classes():
    assert isinstance(validate(Filling.from_rows(WORKED_C), "content", bound=7), ContentTabloid)
    assert isinstance(validate(Filling.from_rows(WORKED_H), "hook"), HookTabloid)
    assert isinstance(validate(Filling.from_rows(WORKED_T), "ssyt", bound=7), SemistandardTableau)


def test_content_range_violation():
    ok = Filling.from_rows([[1, 0], [2]])
    assert violations(ok, "content", bound=2) == []
    bad = Filling.from_rows([[1, -1], [2]])
    found = violations(bad, "content", bound=2)
    assert [v.cell for v in found] == [Cell(1, 2)]
    with pytest.raises(InvalidFilling) as exc:
        validate(bad, "content", bound=2)
    assert exc.value.violations == found


def test_violation_list_is_complete():
    f = Filling.from_rows([[3, 1], [1]])
    found = violations(f, "ssyt", bound=2)
    kinds = sorted(str(v) for v in found)
    # (1,1)=3 exceeds the bound, breaks its row and its column
    assert len(found) == 3
    assert all(v.cell == Cell(1, 1) for v in found), kinds


def test_box_input_ranges():
    f = Filling.from_rows([[-1, 2], [0, 3]])
    assert violations(f, "box-input", dims=(2, 2, 2)) == []
    assert [v.cell for v in violations(Filling.from_rows([[-2, 2], [0, 4]]), "box-input", dims=(2, 2, 2))] \
        == [Cell(1, 1), Cell(2, 2)]


def test_bad_row_lengths():
    with pytest.raises(FillingError):
        Filling(Partition((2, 1)), [[1], [1, 2]])


def test_ssyt_to_pp_examples():
    t = SemistandardTableau(Filling.from_rows([[1]]), 2)
    assert ssyt_to_pp(t, 1).filling.rows == ((1,),)
    t = SemistandardTableau(Filling.from_rows([[2]]), 2)
    assert ssyt_to_pp(t, 1).filling.rows == ((0,),)
    t = SemistandardTableau(Filling.from_rows([[1, 1], [2, 2]]), 4)
    assert ssyt_to_pp(t, 2).filling.rows == ((2, 2), (2, 2))
    # b = 0 forces row i to hold i
    t = SemistandardTableau(Filling.from_rows([[1, 1], [2, 2]]), 2)
    assert ssyt_to_pp(t, 0).filling.rows == ((0, 0), (0, 0))


def test_ssyt_to_pp_errors():
    with pytest.raises(NotRectangular):
        ssyt_to_pp(SemistandardTableau(Filling.from_rows([[1, 1], [2]]), 3), 1)
    with pytest.raises(BoundMismatch):
        ssyt_to_pp(SemistandardTableau(Filling.from_rows([[1], [2]]), 3), 2)


@pytest.mark.parametrize("a,b,c", [(a, b, c) for a in (1, 2) for b in (0, 1, 2) for c in (1, 2)])
def test_deformation_is_bijection(a, b, c):
    shape = rectangle(a, c)
    ssyts = [f for f in brute_grids(shape, 1, a + b) if is_ssyt(f)]
    pps = {f for f in brute_grids(shape, 0, b) if is_pp(f)}
    images = [ssyt_to_pp(SemistandardTableau(t, a + b), b) for t in ssyts]
    assert {p.filling for p in images} == pps
    assert len(images) == len(pps)
    for t, p in zip(ssyts, images):
        assert pp_to_ssyt(p).filling == t
        assert norm(p.filling) == b * a * c + c * a * (a + 1) // 2 - norm(t)


@st.composite
def fillings(draw):
    parts = sorted(draw(st.lists(st.integers(1, 5), max_size=5)), reverse=True)
    rows = [draw(st.lists(st.integers(-50, 50), min_size=p, max_size=p)) for p in parts]
    return Filling(Partition(tuple(parts)), rows)


@given(fillings())
def test_json_and_text_round_trip(f):
    assert Filling.from_json(f.dumps()) == f
    assert Filling.from_json(f.to_json()).dumps() == f.dumps()
    assert Filling.from_text(f.to_text()) == f
    assert Filling.from_text(f.to_text()).to_text() == f.to_text()


def test_json_format():
    f = Filling.from_rows([[7, 3, 5, -2], [7, 3, 2], [5, 4, 2], [4, 6]])
    assert f.dumps() == '{"shape":[4,3,3,2],"rows":[[7,3,5,-2],[7,3,2],[5,4,2],[4,6]]}'


@given(fillings(), st.integers(0, 3))
def test_validation_pure_and_monotone_in_bound(f, extra):
    first = violations(f, "ssyt", bound=max(f.shape.r, 1) + 3)
    assert violations(f, "ssyt", bound=max(f.shape.r, 1) + 3) == first
    if not first:
        assert violations(f, "ssyt", bound=max(f.shape.r, 1) + 3 + extra) == []


def test_plane_partition_checks():
    assert violations(Filling.from_rows([[2, 1], [1, 0]]), "pp", bound=2) == []
    assert violations(Filling.from_rows([[1, 2], [1, 0]]), "pp", bound=2)
    assert violations(Filling.from_rows([[2, 1], [1]]), "pp", bound=2)
    PlanePartition(Filling.from_rows([[0]]), 0)
