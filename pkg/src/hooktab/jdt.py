"""Modified jeu de taquin: forward (right/bottom) and backward (left/top) walks.

A forward move slides the special entry ``s`` one cell right or down.  The
neighbour it displaces into the vacated cell is adjusted by one: ``x + 1``
for a right move, ``y - 1`` for a down move.  Backward moves undo them
(``x - 1`` for left, ``y + 1`` for up).

The walkers work in place on 0-based ``list[list[int]]`` grids.  Public
wrappers take and return :class:`~hooktab.filling.Filling` values and
1-based cells.

Checking mode re-validates the ordered region before the walk and after
every step.  Turn it on with :func:`set_checking` or ``HOOKTAB_CHECK=1``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .filling import Filling, order_violations
from .shape import Cell, Partition

INF = math.inf

_checking = os.environ.get("HOOKTAB_CHECK", "") not in ("", "0", "false", "no")


def set_checking(flag: bool) -> None:
    global _checking
    _checking = bool(flag)


def checking() -> bool:
    return _checking


def _resolve(check: Optional[bool]) -> bool:
    return _checking if check is None else check


class PreconditionViolated(AssertionError):
    pass


class MissedOmega(ValueError):
    """A backward walk left the region without reaching its target cell."""


class Move(str, Enum):
    RIGHT = "Right"
    DOWN = "Down"
    LEFT = "Left"
    UP = "Up"

    @property
    def inverse(self) -> Move:
        return _INVERSE[self]

    @property
    def delta(self) -> tuple[int, int]:
        return _DELTA[self]


_INVERSE = {Move.RIGHT: Move.LEFT, Move.LEFT: Move.RIGHT, Move.DOWN: Move.UP, Move.UP: Move.DOWN}
_DELTA = {Move.RIGHT: (0, 1), Move.LEFT: (0, -1), Move.DOWN: (1, 0), Move.UP: (-1, 0)}
_ADJUST = {Move.RIGHT: 1, Move.DOWN: -1, Move.LEFT: -1, Move.UP: 1}


@dataclass(frozen=True)
class JdtStep:
    kind: Move
    frm: Cell
    to: Cell
    displaced_before: int
    displaced_after: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "from": list(self.frm),
            "to": list(self.to),
            "displaced": [self.displaced_before, self.displaced_after],
        }

    @classmethod
    def from_json(cls, obj: dict) -> JdtStep:
        before, after = obj["displaced"]
        return cls(Move(obj["kind"]), Cell(*obj["from"]), Cell(*obj["to"]), before, after)


@dataclass(frozen=True)
class JdtPath:
    start: Cell
    end: Cell
    steps: tuple[JdtStep, ...] = ()

    @property
    def kinds(self) -> list[Move]:
        return [s.kind for s in self.steps]

    @property
    def cells(self) -> list[Cell]:
        """Visited cells from start to end."""
        return [self.start] + [s.to for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "start": list(self.start),
            "end": list(self.end),
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, obj: dict) -> JdtPath:
        return cls(Cell(*obj["start"]), Cell(*obj["end"]),
                   tuple(JdtStep.from_json(s) for s in obj["steps"]))


def _step_budget(shape: Partition) -> int:
    return max(shape.r - 1, 0) + max((shape.parts[0] if shape.parts else 0) - 1, 0)


def _check_region_after_step(grid, shape, region, special: Cell, forward: bool) -> None:
    for cell, what in order_violations(grid, region):
        if forward:
            ok = cell == special
        else:
            i, j = special
            ok = cell in (special, (i, j - 1), (i - 1, j))
        if not ok:
            raise PreconditionViolated(
                f"order violation at {cell} ({what}) not involving special entry at {special}"
            )


def slide_forward(grid: list[list[int]], shape: Partition, omega: Sequence[int], *,
                  check: Optional[bool] = None, record: bool = True) -> JdtPath:
    """Move the entry at ``omega`` right/down in place; return its path."""
    check = _resolve(check)
    lengths = shape.parts
    nrows = len(lengths)
    p, q = omega[0] - 1, omega[1] - 1
    if check:
        pos = shape.position(Cell(p + 1, q + 1))
        region = shape.order[pos + 1:]
        bad = order_violations(grid, region)
        if bad:
            raise PreconditionViolated(f"successor region of {tuple(omega)} is not ordered: {bad[0]}")
        region = shape.order[pos:]
    s = grid[p][q]
    steps = []
    while True:
        x = grid[p][q + 1] if q + 1 < lengths[p] else INF
        y = grid[p + 1][q] if p + 1 < nrows and q < lengths[p + 1] else INF
        if s <= x and s < y:
            break
        if x + 1 < y:
            grid[p][q] = x + 1
            kind, before, np_, nq = Move.RIGHT, x, p, q + 1
        else:
            grid[p][q] = y - 1
            kind, before, np_, nq = Move.DOWN, y, p + 1, q
        grid[np_][nq] = s
        if record:
            steps.append(JdtStep(kind, Cell(p + 1, q + 1), Cell(np_ + 1, nq + 1),
                                 before, before + _ADJUST[kind]))
        p, q = np_, nq
        if check:
            _check_region_after_step(grid, shape, region, Cell(p + 1, q + 1), forward=True)
    if check:
        bad = order_violations(grid, region)
        if bad:
            raise PreconditionViolated(f"region of {tuple(omega)} not a skew tableau after walk: {bad[0]}")
        if len(steps) > _step_budget(shape):
            raise PreconditionViolated("forward walk exceeded its step budget")
    return JdtPath(Cell(*omega), Cell(p + 1, q + 1), tuple(steps))


def count_forward_moves(grid: list[list[int]], lengths: Sequence[int], p: int, q: int) -> tuple[int, int, int]:
    """Bare forward walk from 0-based ``(p, q)``; returns ``(moves, p', q')``.

    Used by the samplers, which need neither paths nor checks.
    """
    nrows = len(lengths)
    s = grid[p][q]
    moves = 0
    while True:
        right = q + 1 < lengths[p]
        below = p + 1 < nrows and q < lengths[p + 1]
        if right:
            x = grid[p][q + 1]
            if below:
                y = grid[p + 1][q]
                if s <= x and s < y:
                    break
                if x + 1 < y:
                    grid[p][q] = x + 1
                    q += 1
                else:
                    grid[p][q] = y - 1
                    p += 1
            else:
                if s <= x:
                    break
                grid[p][q] = x + 1
                q += 1
        elif below:
            y = grid[p + 1][q]
            if s < y:
                break
            grid[p][q] = y - 1
            p += 1
        else:
            break
        moves += 1
    grid[p][q] = s
    return moves, p, q


def slide_backward(grid: list[list[int]], shape: Partition, omega_prime: Sequence[int],
                   omega: Sequence[int], *, check: Optional[bool] = None) -> Optional[JdtPath]:
    """Move the entry at ``omega_prime`` left/up in place until ``omega``.

    Returns ``None`` when the walk misses ``omega``; the grid is then left
    in its partially walked state, so probe on a copy.

    A left neighbour is ignored (treated as minus infinity) once the
    special entry sits in ``omega``'s column, and so is a missing upper
    neighbour.
    """
    check = _resolve(check)
    oi, oj = omega[0] - 1, omega[1] - 1
    p, q = omega_prime[0] - 1, omega_prime[1] - 1
    if p < oi or q < oj:
        raise PreconditionViolated(f"{tuple(omega_prime)} is not weakly right of and below {tuple(omega)}")
    if check:
        pos = shape.position(Cell(oi + 1, oj + 1))
        region = shape.order[pos:]
        bad = order_violations(grid, region)
        if bad:
            raise PreconditionViolated(f"region of {tuple(omega)} is not ordered: {bad[0]}")
    s = grid[p][q]
    steps = []
    while (p, q) != (oi, oj):
        if p < oi:
            return None
        x = grid[p][q - 1] if q > oj else -INF
        y = grid[p - 1][q] if p > 0 else -INF
        if x - 1 > y:
            grid[p][q] = x - 1
            kind, before, np_, nq = Move.LEFT, x, p, q - 1
        else:
            grid[p][q] = y + 1
            kind, before, np_, nq = Move.UP, y, p - 1, q
        grid[np_][nq] = s
        steps.append(JdtStep(kind, Cell(p + 1, q + 1), Cell(np_ + 1, nq + 1),
                             before, before + _ADJUST[kind]))
        p, q = np_, nq
        if check and p >= oi:
            _check_region_after_step(grid, shape, region, Cell(p + 1, q + 1), forward=False)
    if check and len(steps) > _step_budget(shape):
        raise PreconditionViolated("backward walk exceeded its step budget")
    return JdtPath(Cell(*omega_prime), Cell(oi + 1, oj + 1), tuple(steps))


def forward_path(f: Filling, omega: Sequence[int], *, check: Optional[bool] = None) -> tuple[Filling, JdtPath]:
    grid = f.grid()
    path = slide_forward(grid, f.shape, Cell(*omega), check=check)
    return Filling(f.shape, grid), path


def backward_path(f: Filling, omega_prime: Sequence[int], omega: Sequence[int], *,
                  check: Optional[bool] = None) -> tuple[Filling, JdtPath]:
    """Backward walk on a copy of ``f``; raises :class:`MissedOmega` on a miss."""
    grid = f.grid()
    path = slide_backward(grid, f.shape, Cell(*omega_prime), Cell(*omega), check=check)
    if path is None:
        raise MissedOmega(f"backward walk from {tuple(omega_prime)} misses {tuple(omega)}")
    return Filling(f.shape, grid), path


def path_only(f: Filling, omega_prime: Sequence[int], omega: Sequence[int], *,
              check: Optional[bool] = None) -> Optional[JdtPath]:
    """The backward path ``backward_path`` would take, or ``None`` on a miss."""
    return slide_backward(f.grid(), f.shape, Cell(*omega_prime), Cell(*omega), check=check)
