import itertools

import pytest

from conftest import SLIDE_IN, SLIDE_OUT
from hooktab.filling import Filling, norm, order_violations
from hooktab.jdt import (JdtPath, MissedOmega, Move, PreconditionViolated, backward_path,
                         count_forward_moves, forward_path, path_only)
from hooktab.qcount import enumerate_fillings
from hooktab.shape import Cell, Partition


def test_forward_slide_golden():
    out, path = forward_path(Filling.from_rows(SLIDE_IN), (2, 2))
    assert out.to_lists() == SLIDE_OUT
    assert path.start == Cell(2, 2) and path.end == Cell(3, 4)
    assert path.kinds == [Move.RIGHT, Move.DOWN, Move.RIGHT]
    assert path.cells == [(2, 2), (2, 3), (3, 3), (3, 4)]


def test_backward_slide_inverts_forward():
    f = Filling.from_rows(SLIDE_OUT)
    out, path = backward_path(f, (3, 4), (2, 2))
    assert out.to_lists() == SLIDE_IN
    assert path.kinds == [Move.LEFT, Move.UP, Move.LEFT]
    assert path.end == Cell(2, 2)
    probe = path_only(f, (3, 4), (2, 2))
    assert probe == path
    assert f.to_lists() == SLIDE_OUT


def test_single_cell_and_trivial_backward():
    out, path = forward_path(Filling.from_rows([[5]]), (1, 1))
    assert path.steps == () and path.end == Cell(1, 1) and out.rows == ((5,),)
    f = Filling.from_rows(SLIDE_OUT)
    out, path = backward_path(f, (2, 2), (2, 2))
    assert path.steps == () and out == f
    assert path_only(f, (2, 2), (2, 2)).steps == ()


def test_two_cell_column():
    out, path = forward_path(Filling.from_rows([[2], [2]]), (1, 1))
    assert out.to_lists() == [[1], [2]]
    assert path.end == Cell(2, 1) and path.kinds == [Move.DOWN]
    assert path.steps[0].displaced_before == 2 and path.steps[0].displaced_after == 1
    back, bpath = backward_path(out, (2, 1), (1, 1))
    assert back.to_lists() == [[2], [2]]
    assert bpath.kinds == [Move.UP]
    assert (bpath.steps[0].displaced_before, bpath.steps[0].displaced_after) == (1, 2)


def test_forward_precondition_checked():
    # successors of (1,1) in (2,2): (2,1),(1,2),(2,2); make them unordered
    f = Filling.from_rows([[1, 5], [3, 2]])
    with pytest.raises(PreconditionViolated):
        forward_path(f, (1, 1), check=True)
    forward_path(f, (1, 1), check=False)


def test_backward_miss():
    # s at (1,2) walks up out of reach of omega=(2,1)
    f = Filling.from_rows([[1, 1], [1, 9]])
    assert path_only(f, (2, 2), (2, 1), check=False) is None
    with pytest.raises(MissedOmega):
        backward_path(f, (2, 2), (2, 1), check=False)


def test_path_json_round_trip():
    _, path = forward_path(Filling.from_rows(SLIDE_IN), (2, 2))
    obj = path.to_json()
    assert obj["start"] == [2, 2] and obj["end"] == [3, 4]
    assert obj["steps"][0] == {"kind": "Right", "from": [2, 2], "to": [2, 3], "displaced": [3, 4]}
    assert JdtPath.from_json(obj) == path


def _successor_region_ordered(f, omega):
    shape = f.shape
    pos = shape.position(Cell(*omega))
    return not order_violations(f.rows, shape.order[pos + 1:])


@pytest.mark.parametrize("parts", [(2, 1), (2, 2), (3, 1)])
def test_inverse_property_exhaustive(parts):
    lam = Partition(parts)
    budget = (lam.r - 1) + (lam.parts[0] - 1)
    checked = 0
    for f in enumerate_fillings("content", lam, 3):
        for omega in lam.order:
            if not _successor_region_ordered(f, omega):
                continue
            out, path = forward_path(f, omega, check=True)
            assert len(path) <= budget
            right = path.kinds.count(Move.RIGHT)
            down = path.kinds.count(Move.DOWN)
            assert norm(out) - norm(f) == right - down
            for step in path.steps:
                di, dj = step.to.row - step.frm.row, step.to.col - step.frm.col
                assert (di, dj) == step.kind.delta
            back, bpath = backward_path(out, path.end, omega, check=True)
            assert back == f
            assert [s.kind for s in bpath.steps] == [s.kind.inverse for s in reversed(path.steps)]
            assert norm(f) - norm(out) == -(right - down)
            assert path_only(out, path.end, omega) == bpath
            checked += 1
    assert checked > 0


@pytest.mark.parametrize("parts", [(2, 1), (2, 2), (3, 2), (3, 3, 1)])
def test_bare_walker_matches_recording_walker(parts):
    lam = Partition(parts)
    for f in itertools.islice(enumerate_fillings("content", lam, lam.r + 1), 3000):
        omega = lam.order[-2] if len(lam.order) > 1 else lam.order[0]
        if not _successor_region_ordered(f, omega):
            continue
        out, path = forward_path(f, omega, check=False)
        grid = f.grid()
        moves, p, q = count_forward_moves(grid, lam.parts, omega[0] - 1, omega[1] - 1)
        assert grid == out.grid()
        assert moves == len(path) and (p + 1, q + 1) == path.end
