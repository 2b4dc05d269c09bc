"""The hook-content bijection between content tabloids and (tableau, hook tabloid) pairs.

:func:`hc_forward` turns a content tabloid ``C`` into a pair ``(T, H)`` with
``norm(T) + norm(H) == norm(C)``.  :func:`hc_inverse` undoes this without
any involution principle.  It rebuilds ``C`` cell by cell: among the
candidate cells read off ``H`` it picks the one whose backward path comes
first under :func:`compare_paths`.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Optional, Sequence

from .filling import (ContentTabloid, Filling, HookTabloid, InvalidFilling,
                      SemistandardTableau, norm, order_violations, violations)
from .jdt import JdtPath, Move, _resolve, slide_backward, slide_forward
from .shape import Cell, Partition


class InvalidInput(ValueError):
    pass


class InternalAssertion(AssertionError):
    pass


class CandidateMissedOmega(InternalAssertion):
    pass


class CandidateOutsideShape(InternalAssertion):
    pass


class IncomparablePaths(ValueError):
    pass


class Order(Enum):
    BEFORE = -1
    AFTER = 1


@dataclass(frozen=True)
class TraceEvent:
    loop_index: int
    distinguished: Cell
    path: JdtPath
    T_after: Filling
    H_after: Filling

    def to_json(self) -> dict:
        return {
            "loop_index": self.loop_index,
            "distinguished": list(self.distinguished),
            "path": self.path.to_json(),
            "T_after": self.T_after.to_json(),
            "H_after": self.H_after.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> TraceEvent:
        return cls(obj["loop_index"], Cell(*obj["distinguished"]), JdtPath.from_json(obj["path"]),
                   Filling.from_json(obj["T_after"]), Filling.from_json(obj["H_after"]))


@dataclass(frozen=True)
class HcResult:
    tableau: SemistandardTableau
    hook: HookTabloid
    trace: Optional[tuple[TraceEvent, ...]] = None


@dataclass(frozen=True)
class HcInverseResult:
    tabloid: ContentTabloid
    trace: Optional[tuple[TraceEvent, ...]] = None


# -- path order ---------------------------------------------------------------

_EAST, _EXHAUSTED, _SOUTH = 0, 1, 2


def _continuation(cells: list[Cell], k: int) -> int:
    if k >= len(cells):
        return _EXHAUSTED
    (i0, j0), (i1, j1) = cells[k - 1], cells[k]
    if (i1, j1) == (i0, j0 + 1):
        return _EAST
    if (i1, j1) == (i0 + 1, j0):
        return _SOUTH
    raise IncomparablePaths(f"path is not a backward path: {cells[k - 1]} -> {cells[k]}")


def compare_paths(P: JdtPath, Q: JdtPath) -> Order:
    """Order two non-crossing backward paths that end in the same cell.

    Both paths are read outward from their common end.  At the first place
    where they part, a path that continues east comes first, then one that
    ends there, then one that continues south.
    """
    if P.end != Q.end:
        raise IncomparablePaths(f"paths end in different cells {P.end} and {Q.end}")
    p_cells = P.cells[::-1]
    q_cells = Q.cells[::-1]
    k = 1
    while k < len(p_cells) and k < len(q_cells) and p_cells[k] == q_cells[k]:
        k += 1
    cp, cq = _continuation(p_cells, k), _continuation(q_cells, k)
    if cp == cq:
        raise IncomparablePaths(f"paths from {P.start} and {Q.start} do not part")
    return Order.BEFORE if cp < cq else Order.AFTER


def _check_total_order(paths: Sequence[JdtPath]) -> None:
    n = len(paths)
    rel = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a != b:
                rel[a][b] = compare_paths(paths[a], paths[b])
    for a in range(n):
        for b in range(a + 1, n):
            if rel[a][b] == rel[b][a]:
                raise InternalAssertion(f"path order not antisymmetric for {paths[a].start}, {paths[b].start}")
    for a, b, c in permutations(range(n), 3):
        if rel[a][b] is Order.BEFORE and rel[b][c] is Order.BEFORE and rel[a][c] is not Order.BEFORE:
            raise InternalAssertion("path order not transitive")


def _first_path(paths: Sequence[JdtPath]) -> JdtPath:
    best = paths[0]
    for P in paths[1:]:
        if compare_paths(P, best) is Order.BEFORE:
            best = P
    return best


# -- candidates ---------------------------------------------------------------

def _candidates(hgrid: Sequence[Sequence[int]], shape: Partition, i: int, j: int) -> list[Cell]:
    out = []
    height = shape.col_length(j)
    for k in range(i, height + 1):
        e = hgrid[k - 1][j - 1]
        if e <= 0:
            cell = Cell(k, j - e)
            if not shape.contains(cell):
                raise CandidateOutsideShape(f"candidate {cell} from H{(k, j)} = {e} lies outside the shape")
            out.append(cell)
    return out


def candidate_cells(H: Filling, omega: Sequence[int]) -> list[Cell]:
    """Cells ``(k, j - e)`` for each nonpositive ``e = H(k, j)`` with ``k >= i``."""
    i, j = omega
    if not H.shape.contains(Cell(i, j)):
        raise KeyError(f"cell {(i, j)} outside shape")
    return _candidates(H.rows, H.shape, i, j)


def _select(tgrid, hgrid, shape: Partition, omega: Cell, check: bool) -> JdtPath:
    """The backward path of the candidate that comes first; the grid is not touched."""
    paths = []
    for cell in _candidates(hgrid, shape, *omega):
        path = slide_backward([row[:] for row in tgrid], shape, cell, omega, check=False)
        if path is None:
            raise CandidateMissedOmega(f"backward path of candidate {cell} misses {omega}")
        paths.append(path)
    if not paths:
        raise InternalAssertion(f"no candidate cells for {omega}")
    if check:
        _check_total_order(paths)
    return _first_path(paths)


# -- algorithms ---------------------------------------------------------------

def _check_loop(tgrid, hgrid, shape: Partition, omega: Cell, bound: int, C_norm: int | None) -> None:
    pos = shape.position(omega)
    bad = order_violations(tgrid, shape.order[pos:])
    if bad:
        raise InternalAssertion(f"region of {omega} is not a skew tableau: {bad[0]}")
    H = Filling(shape, hgrid)
    if violations(H, "hook"):
        raise InternalAssertion(f"H is not a hook tabloid after loop at {omega}")
    if max((max(r) for r in tgrid if r), default=0) > bound:
        raise InternalAssertion(f"an entry of T exceeds the bound {bound}")
    if C_norm is not None and sum(map(sum, tgrid)) + sum(map(sum, hgrid)) != C_norm:
        raise InternalAssertion(f"norm not conserved after loop at {omega}")


def hc_forward(C: ContentTabloid | Filling, bound: int | None = None, *, trace: bool = False,
               check: Optional[bool] = None) -> HcResult:
    """Map a content tabloid to a (semistandard tableau, hook tabloid) pair.

    Distinguished cells run from last to first in the column-major order.
    With ``check`` on, every loop asserts norm conservation, the skew-tableau
    region, the entry ceiling, hook-tabloid validity, and that the inverse
    selection would pick the cell this loop ended in.
    """
    C = _as_content(C, bound)
    check = _resolve(check)
    shape, b = C.filling.shape, C.bound
    T = C.filling.grid()
    H = [[0] * p for p in shape.parts]
    C_norm = norm(C.filling)
    events = []
    for loop, omega in enumerate(reversed(shape.order)):
        path = slide_forward(T, shape, omega, check=check)
        (i, j), (i2, j2) = omega, path.end
        for k in range(i, i2):
            H[k - 1][j - 1] = H[k][j - 1] + 1
        H[i2 - 1][j - 1] = j - j2
        if check:
            _check_loop(T, H, shape, omega, b, C_norm)
            chosen = _select(T, H, shape, omega, check=True)
            if chosen.start != path.end:
                raise InternalAssertion(
                    f"inverse would pick {chosen.start} at {omega}, but the forward path ended in {path.end}"
                )
        if trace:
            events.append(TraceEvent(loop, omega, path, Filling(shape, T), Filling(shape, H)))
    result = HcResult(SemistandardTableau(Filling(shape, T), b), HookTabloid(Filling(shape, H)),
                      tuple(events) if trace else None)
    if check and norm(result.tableau.filling) + norm(result.hook.filling) != C_norm:
        raise InternalAssertion("norm(T) + norm(H) != norm(C)")
    return result


def hc_inverse(T: SemistandardTableau | Filling, H: HookTabloid | Filling, bound: int | None = None, *,
               trace: bool = False, check: Optional[bool] = None) -> HcInverseResult:
    """Map a (tableau, hook tabloid) pair back to its content tabloid.

    Distinguished cells run from first to last.  In each loop every
    candidate is probed on a scratch copy; only the winner moves in ``T``.
    """
    T, H = _as_pair(T, H, bound)
    check = _resolve(check)
    shape, b = T.filling.shape, T.bound
    tgrid = T.filling.grid()
    hgrid = H.filling.grid()
    total = norm(T.filling) + norm(H.filling)
    events = []
    for loop, omega in enumerate(shape.order):
        chosen = _select(tgrid, hgrid, shape, omega, check)
        path = slide_backward(tgrid, shape, chosen.start, omega, check=check)
        if path != chosen:
            raise InternalAssertion("committed backward path differs from its probe")
        (i, j), (i2, _) = omega, chosen.start
        for k in range(i2, i, -1):
            hgrid[k - 1][j - 1] = hgrid[k - 2][j - 1] - 1
        hgrid[i - 1][j - 1] = 0
        if check:
            if violations(Filling(shape, hgrid), "hook"):
                raise InternalAssertion(f"H is not a hook tabloid after loop at {omega}")
            if sum(map(sum, tgrid)) + sum(map(sum, hgrid)) != total:
                raise InternalAssertion(f"norm not conserved after loop at {omega}")
            nxt = shape.order[loop + 1:]
            bad = order_violations(tgrid, nxt)
            if bad:
                raise InternalAssertion(f"successor region of {omega} is not ordered: {bad[0]}")
        if trace:
            events.append(TraceEvent(loop, omega, path, Filling(shape, tgrid), Filling(shape, hgrid)))
    out = Filling(shape, tgrid)
    try:
        C = ContentTabloid(out, b)
    except InvalidFilling as exc:
        raise InternalAssertion(f"output is not a content tabloid: {exc}") from None
    if any(any(r) for r in hgrid):
        raise InternalAssertion("hook tabloid not exhausted")
    return HcInverseResult(C, tuple(events) if trace else None)


def _as_content(C, bound) -> ContentTabloid:
    if isinstance(C, ContentTabloid):
        return C
    if bound is None:
        raise InvalidInput("a bare filling needs an explicit bound")
    try:
        return ContentTabloid(C, bound)
    except InvalidFilling as exc:
        raise InvalidInput(str(exc)) from exc


def _as_pair(T, H, bound) -> tuple[SemistandardTableau, HookTabloid]:
    try:
        if not isinstance(T, SemistandardTableau):
            if bound is None:
                raise InvalidInput("a bare tableau filling needs an explicit bound")
            T = SemistandardTableau(T, bound)
        if not isinstance(H, HookTabloid):
            H = HookTabloid(H)
    except InvalidFilling as exc:
        raise InvalidInput(str(exc)) from exc
    if T.filling.shape != H.filling.shape:
        raise InvalidInput("tableau and hook tabloid have different shapes")
    return T, H


def forward_endpoints(trace: Sequence[TraceEvent]) -> dict[Cell, Cell]:
    """Distinguished cell -> cell its forward path ended in."""
    return {ev.distinguished: ev.path.end for ev in trace}


def inverse_choices(trace: Sequence[TraceEvent]) -> dict[Cell, Cell]:
    """Distinguished cell -> candidate cell chosen by the inverse."""
    return {ev.distinguished: ev.path.start for ev in trace}
