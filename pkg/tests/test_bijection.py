import itertools

import pytest

from conftest import WORKED_C, WORKED_H, WORKED_T
from hooktab.bijection import (IncomparablePaths, InvalidInput, Order, TraceEvent, candidate_cells,
                               compare_paths, forward_endpoints, hc_forward, hc_inverse,
                               inverse_choices)
from hooktab.filling import ContentTabloid, Filling, norm
from hooktab.jdt import JdtPath, JdtStep, Move
from hooktab.qcount import enumerate_fillings
from hooktab.shape import Cell, Partition


def _backward(cells_from_omega):
    """A backward path given as the cells it visits, read from its end outward."""
    cells = [Cell(*c) for c in reversed(cells_from_omega)]
    steps = []
    for a, b in zip(cells, cells[1:]):
        kind = Move.LEFT if b.row == a.row else Move.UP
        steps.append(JdtStep(kind, a, b, 0, 0))
    return JdtPath(cells[0], cells[-1], tuple(steps))


def test_worked_example_forward_and_inverse():
    res = hc_forward(Filling.from_rows(WORKED_C), 7)
    assert res.tableau.filling.to_lists() == WORKED_T
    assert res.hook.filling.to_lists() == WORKED_H
    assert (norm(Filling.from_rows(WORKED_C)), norm(res.tableau.filling), norm(res.hook.filling)) == (46, 48, -2)
    back = hc_inverse(res.tableau, res.hook)
    assert back.tabloid.filling.to_lists() == WORKED_C


def test_tiny_examples():
    res = hc_forward(Filling.from_rows([[2], [2]]), 2)
    assert res.tableau.filling.to_lists() == [[1], [2]]
    assert res.hook.filling.to_lists() == [[1], [0]]
    res = hc_forward(Filling.from_rows([[3]]), 3)
    assert res.tableau.filling.to_lists() == [[3]] and res.hook.filling.to_lists() == [[0]]


def test_bare_inputs_need_bound():
    with pytest.raises(InvalidInput):
        hc_forward(Filling.from_rows([[1]]))
    with pytest.raises(InvalidInput):
        hc_forward(Filling.from_rows([[9]]), 3)
    with pytest.raises(InvalidInput):
        hc_inverse(Filling.from_rows([[2, 1]]), Filling.zeros(Partition((2,))), 3)
    with pytest.raises(InvalidInput):
        hc_inverse(Filling.from_rows([[1]]), Filling.zeros(Partition((2,))), 3)


def test_trace_matches_worked_example(worked_trace):
    C = ContentTabloid(Filling.from_rows(worked_trace["content"]), worked_trace["bound"])
    res = hc_forward(C, trace=True)
    assert len(res.trace) == len(worked_trace["loops"])
    for ev, want in zip(res.trace, worked_trace["loops"]):
        assert list(ev.distinguished) == want["distinguished"]
        assert list(ev.path.end) == want["end"]
        assert [k.value for k in ev.path.kinds] == want["kinds"]
        assert ev.T_after.to_lists() == want["T_after"]
        assert ev.H_after.to_lists() == want["H_after"]
    # the state with H column 1 = [3,-1,-2,0] is the final one
    assert [r[0] for r in res.trace[-1].H_after.rows] == [3, -1, -2, 0]
    for ev in res.trace:
        assert TraceEvent.from_json(ev.to_json()) == ev


def test_inverse_trace_mirrors_forward():
    C = ContentTabloid(Filling.from_rows(WORKED_C), 7)
    fwd = hc_forward(C, trace=True)
    inv = hc_inverse(fwd.tableau, fwd.hook, trace=True)
    assert forward_endpoints(fwd.trace) == inverse_choices(inv.trace)
    # the inverse state before loop k equals the forward state after its mirror loop
    n = len(fwd.trace)
    for k in range(n - 1):
        assert inv.trace[k].T_after == fwd.trace[n - 2 - k].T_after
        assert inv.trace[k].H_after == fwd.trace[n - 2 - k].H_after


def test_candidate_cells(worked_trace):
    # state before the last loop: distinguished (1,1)
    loops = worked_trace["loops"]
    H = Filling.from_rows(loops[-1]["H_after"])
    assert candidate_cells(H, (1, 1)) == [(2, 2), (3, 3), (4, 1)]
    Z = Filling.zeros(Partition((4, 3, 3, 2)))
    assert candidate_cells(Z, (2, 1)) == [(2, 1), (3, 1), (4, 1)]
    assert candidate_cells(Z, (1, 4)) == [(1, 4)]


CASE_A_P = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3), (4, 4), (4, 5), (4, 6), (5, 6), (5, 7)]
CASE_A_Q = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3), (5, 3), (6, 3), (6, 4), (7, 4)]
CASE_B_P = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3)]
CASE_B_Q = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3), (5, 3), (5, 4), (5, 5), (5, 6), (5, 7)]


@pytest.mark.parametrize("p, q", [(CASE_A_P, CASE_A_Q), (CASE_B_P, CASE_B_Q), (CASE_A_P, CASE_B_P)],
                         ids=["parting", "p-stops-q-continues", "p-continues-q-stops"])
def test_comparator_cases(p, q):
    P, Q = _backward(p), _backward(q)
    assert compare_paths(P, Q) is Order.BEFORE
    assert compare_paths(Q, P) is Order.AFTER


def test_comparator_total_on_case_paths():
    paths = [_backward(c) for c in (CASE_A_P, CASE_A_Q, CASE_B_P, CASE_B_Q)]
    ranks = sorted(range(4), key=lambda k: sum(compare_paths(paths[k], paths[m]) is Order.AFTER
                                               for m in range(4) if m != k))
    for x, y in itertools.combinations(ranks, 2):
        assert compare_paths(paths[x], paths[y]) is Order.BEFORE


def test_comparator_rejects_bad_pairs():
    with pytest.raises(IncomparablePaths):
        compare_paths(_backward([(1, 1), (1, 2)]), _backward([(2, 2), (2, 3)]))
    with pytest.raises(IncomparablePaths):
        compare_paths(_backward(CASE_B_P), _backward(CASE_B_P))


def _all_content(parts, b):
    return enumerate_fillings("content", Partition(parts), b)


@pytest.mark.parametrize("parts", [(1,), (1, 1), (2,), (2, 1), (2, 2), (3, 1), (2, 2, 1), (3, 2, 1)])
def test_roundtrip_exhaustive(parts):
    lam = Partition(parts)
    for b in range(lam.r, lam.r + 2):
        n = 0
        for f in _all_content(parts, b):
            fwd = hc_forward(f, b, trace=True, check=True)
            inv = hc_inverse(fwd.tableau, fwd.hook, trace=True, check=True)
            assert inv.tabloid.filling == f
            assert norm(fwd.tableau.filling) + norm(fwd.hook.filling) == norm(f)
            assert forward_endpoints(fwd.trace) == inverse_choices(inv.trace)
            n += 1
        sizes = 1
        for cell in lam.order:
            sizes *= b + cell.col - cell.row
        assert n == sizes


def test_forward_inverts_inverse_on_every_pair():
    lam, b = Partition((2, 1)), 2
    hits = 0
    for T in enumerate_fillings("ssyt", lam, b):
        for H in enumerate_fillings("hook", lam, b):
            C = hc_inverse(T, H, b).tabloid
            fwd = hc_forward(C)
            assert fwd.tableau.filling == T and fwd.hook.filling == H
            hits += 1
    assert hits == 2 * 3
