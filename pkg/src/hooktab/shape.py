"""Partitions, Ferrers-diagram geometry and per-cell statistics.

Cells are addressed by 1-based ``(row, col)`` pairs everywhere in the public
API.  The fixed total order of cells is column-major: column 1 top to bottom,
then column 2, and so on.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence


class ShapeError(ValueError):
    """Base class for malformed partitions and cells."""


class RejectsNonMonotone(ShapeError):
    pass


class RejectsNonPositive(ShapeError):
    pass


class CellOutOfShape(ShapeError):
    pass


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


class CellStats(NamedTuple):
    arm: int
    leg: int
    hook: int
    content: int


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise ShapeError(f"parts must be integers, got {p!r}")
            if p <= 0:
                raise RejectsNonPositive(f"part {p} is not positive in {list(parts)}")
        for k in range(len(parts) - 1):
            if parts[k] < parts[k + 1]:
                raise RejectsNonMonotone(f"{list(parts)} is not weakly decreasing")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    @property
    def r(self) -> int:
        """Number of rows."""
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row_length(self, i: int) -> int:
        """Length of 1-based row ``i`` (0 outside the diagram)."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col_length(self, j: int) -> int:
        """Length of 1-based column ``j`` (0 outside the diagram)."""
        conj = self.conjugate
        return conj.parts[j - 1] if 1 <= j <= len(conj.parts) else 0

    @cached_property
    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    @cached_property
    def order(self) -> tuple[Cell, ...]:
        return tuple(cells_in_order(self))

    @cached_property
    def _position(self) -> dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.order)}

    def position(self, cell: Cell) -> int:
        """0-based index of ``cell`` in the fixed column-major order."""
        try:
            return self._position[Cell(*cell)]
        except KeyError:
            raise CellOutOfShape(f"cell {tuple(cell)} is not in {self!r}") from None

    def to_json(self) -> list[int]:
        return list(self.parts)


def parse_partition(parts: Iterable[int] | str) -> Partition:
    """Build a Partition from a sequence of integers or a ``"4,3,3,2"`` string."""
    if isinstance(parts, str):
        text = parts.strip()
        if text in ("", "()", "[]"):
            return Partition(())
        try:
            parts = [int(tok) for tok in text.strip("()[]").split(",") if tok.strip()]
        except ValueError:
            raise ShapeError(f"cannot parse partition {text!r}") from None
    return Partition(tuple(parts))


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def cells_in_order(lam: Partition) -> list[Cell]:
    cols = conjugate(lam).parts
    return [Cell(i, j) for j, height in enumerate(cols, start=1) for i in range(1, height + 1)]


def _require(lam: Partition, cell: Sequence[int]) -> Cell:
    cell = Cell(*cell)
    if not lam.contains(cell):
        raise CellOutOfShape(f"cell {tuple(cell)} is not in {lam!r}")
    return cell


def cell_stats(lam: Partition, cell: Sequence[int]) -> CellStats:
    i, j = _require(lam, cell)
    arm = lam.parts[i - 1] - j
    leg = lam.conjugate.parts[j - 1] - i
    return CellStats(arm=arm, leg=leg, hook=arm + leg + 1, content=j - i)


def successor(lam: Partition, cell: Sequence[int]) -> Optional[Cell]:
    k = lam.position(_require(lam, cell))
    return lam.order[k + 1] if k + 1 < len(lam.order) else None


def predecessor(lam: Partition, cell: Sequence[int]) -> Optional[Cell]:
    k = lam.position(_require(lam, cell))
    return lam.order[k - 1] if k > 0 else None


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, n):
        yield Partition(parts)


def rectangle(rows: int, cols: int) -> Partition:
    """The shape with ``rows`` rows of length ``cols``."""
    if rows < 0 or cols < 0:
        raise ShapeError("rectangle dimensions must be nonnegative")
    if rows == 0 or cols == 0:
        return Partition(())
    return Partition((cols,) * rows)
