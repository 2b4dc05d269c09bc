"""Shape-indexed integer grids and the validated filling classes.

A :class:`Filling` is an immutable grid with exactly one integer per cell of
its shape.  The five filling classes (content tabloid, hook tabloid,
semistandard tableau, plane partition, box filling) differ only by the
predicate that :func:`violations` checks.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .shape import Cell, Partition, cell_stats, rectangle

KINDS = ("content", "hook", "ssyt", "pp", "box-input")


class FillingError(ValueError):
    pass


class NotRectangular(FillingError):
    pass


class BoundMismatch(FillingError):
    pass


class Violation(NamedTuple):
    cell: Optional[Cell]  # None for whole-filling constraints
    constraint: str

    def __str__(self) -> str:
        return f"{self.cell}: {self.constraint}" if self.cell else self.constraint


class InvalidFilling(FillingError):
    """Raised by :func:`validate`; carries the complete violation list."""

    def __init__(self, kind: str, violations: list[Violation]):
        self.kind = kind
        self.violations = violations
        shown = "; ".join(str(v) for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
        super().__init__(f"not a valid {kind} filling: {shown}{more}")


@dataclass(frozen=True)
class Filling:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise FillingError(
                f"row lengths {[len(r) for r in rows]} do not match shape {list(self.shape.parts)}"
            )
        for r in rows:
            for e in r:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise FillingError(f"entries must be integers, got {e!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> Filling:
        rows = [tuple(r) for r in rows]
        return cls(Partition(tuple(len(r) for r in rows)), tuple(rows))

    @classmethod
    def zeros(cls, shape: Partition) -> Filling:
        return cls(shape, tuple((0,) * p for p in shape.parts))

    def __getitem__(self, cell: Sequence[int]) -> int:
        i, j = cell
        if not self.shape.contains(Cell(i, j)):
            raise KeyError(f"cell {(i, j)} outside shape {list(self.shape.parts)}")
        return self.rows[i - 1][j - 1]

    def items(self) -> Iterator[tuple[Cell, int]]:
        for i, row in enumerate(self.rows, start=1):
            for j, e in enumerate(row, start=1):
                yield Cell(i, j), e

    def grid(self) -> list[list[int]]:
        """A fresh mutable 0-based copy of the entries."""
        return [list(r) for r in self.rows]

    def replace(self, updates: dict[Cell, int]) -> Filling:
        g = self.grid()
        for (i, j), e in updates.items():
            g[i - 1][j - 1] = e
        return Filling(self.shape, g)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": self.to_lists()}

    @classmethod
    def from_json(cls, obj: dict | str) -> Filling:
        if isinstance(obj, str):
            obj = json.loads(obj)
        rows = obj["rows"]
        shape = Partition(tuple(obj["shape"])) if "shape" in obj else Partition(tuple(len(r) for r in rows))
        return cls(shape, rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def to_text(self) -> str:
        return "".join(" ".join(str(e) for e in row) + "\n" for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> Filling:
        rows = [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
        return cls.from_rows(rows)

    def __str__(self) -> str:
        return self.to_text().rstrip("\n")


def norm(f: Filling) -> int:
    return sum(sum(r) for r in f.rows)


def order_violations(grid: Sequence[Sequence[int]], region: Iterable[Cell]) -> list[Violation]:
    """Row/column order violations among adjacent pairs lying inside ``region``.

    ``grid`` is 0-based; ``region`` holds 1-based cells.  Rows must weakly
    increase and columns strictly increase, as in a (skew) tableau.
    """
    cells = set(region)
    out = []
    for (i, j) in sorted(cells):
        e = grid[i - 1][j - 1]
        if (i, j + 1) in cells and e > grid[i - 1][j]:
            out.append(Violation(Cell(i, j), f"row not weakly increasing: {e} > {grid[i - 1][j]}"))
        if (i + 1, j) in cells and e >= grid[i][j - 1]:
            out.append(Violation(Cell(i, j), f"column not strictly increasing: {e} >= {grid[i][j - 1]}"))
    return out


def _range_violations(f: Filling, bounds) -> list[Violation]:
    out = []
    for cell, e in f.items():
        lo, hi = bounds(cell)
        if not lo <= e <= hi:
            out.append(Violation(cell, f"entry {e} outside [{lo}, {hi}]"))
    return out


def violations(f: Filling, kind: str, *, bound: int | None = None,
               dims: tuple[int, int, int] | None = None) -> list[Violation]:
    """Every (cell, constraint) pair that keeps ``f`` out of the filling class ``kind``.

    ``bound`` is the largest allowed entry for ``content``/``ssyt`` and the
    ceiling for ``pp``; ``dims`` is ``(a, b, c)`` for ``box-input``.
    """
    lam = f.shape
    if kind == "content":
        _need(bound, kind)
        out = []
        if bound < lam.r:
            out.append(Violation(None, f"bound {bound} smaller than row count {lam.r}"))
        return out + _range_violations(f, lambda c: (1 - cell_stats(lam, c).content, bound))
    if kind == "hook":
        def hook_range(c):
            st = cell_stats(lam, c)
            return -st.arm, st.leg
        return _range_violations(f, hook_range)
    if kind == "ssyt":
        _need(bound, kind)
        out = []
        if bound < lam.r:
            out.append(Violation(None, f"bound {bound} smaller than row count {lam.r}"))
        out += _range_violations(f, lambda c: (1, bound))
        return out + order_violations(f.rows, lam.order)
    if kind == "pp":
        _need(bound, kind)
        if not lam.is_rectangle():
            return [Violation(None, "plane partition shape must be a rectangle")]
        out = _range_violations(f, lambda c: (0, bound))
        for (i, j), e in f.items():
            if j < lam.parts[i - 1] and e < f.rows[i - 1][j]:
                out.append(Violation(Cell(i, j), "row not weakly decreasing"))
            if i < lam.r and e < f.rows[i][j - 1]:
                out.append(Violation(Cell(i, j), "column not weakly decreasing"))
        return out
    if kind == "box-input":
        if dims is None:
            raise TypeError("box-input validation needs dims=(a, b, c)")
        a, b, c = dims
        if lam != rectangle(a, c):
            return [Violation(None, f"shape {list(lam.parts)} is not the {a}x{c} rectangle")]
        return _range_violations(f, lambda cell: (cell.row - a, b + cell.col - 1))
    raise ValueError(f"unknown filling class {kind!r}; expected one of {KINDS}")


def _need(bound, kind):
    if bound is None:
        raise TypeError(f"{kind} validation needs a bound")


@dataclass(frozen=True)
class ContentTabloid:
    filling: Filling
    bound: int

    def __post_init__(self):
        _raise_if(violations(self.filling, "content", bound=self.bound), "content")


@dataclass(frozen=True)
class HookTabloid:
    filling: Filling

    def __post_init__(self):
        _raise_if(violations(self.filling, "hook"), "hook")


@dataclass(frozen=True)
class SemistandardTableau:
    filling: Filling
    bound: int

    def __post_init__(self):
        _raise_if(violations(self.filling, "ssyt", bound=self.bound), "ssyt")


@dataclass(frozen=True)
class PlanePartition:
    filling: Filling
    ceiling: int

    def __post_init__(self):
        _raise_if(violations(self.filling, "pp", bound=self.ceiling), "pp")


@dataclass(frozen=True)
class BoxFilling:
    filling: Filling
    dims: tuple[int, int, int]

    def __post_init__(self):
        _raise_if(violations(self.filling, "box-input", dims=self.dims), "box-input")


def _raise_if(found: list[Violation], kind: str) -> None:
    if found:
        raise InvalidFilling(kind, found)


def validate(f: Filling, kind: str, **params):
    """Wrap ``f`` in the typed class for ``kind``.

    Raises :class:`InvalidFilling` listing every violation otherwise.  Use
    :func:`violations` to get the list without an exception.
    """
    if kind == "content":
        return ContentTabloid(f, params["bound"])
    if kind == "hook":
        return HookTabloid(f)
    if kind == "ssyt":
        return SemistandardTableau(f, params["bound"])
    if kind == "pp":
        return PlanePartition(f, params["bound"])
    if kind == "box-input":
        return BoxFilling(f, tuple(params["dims"]))
    raise ValueError(f"unknown filling class {kind!r}; expected one of {KINDS}")


def _box_dims(shape: Partition) -> tuple[int, int]:
    if not shape.is_rectangle():
        raise NotRectangular(f"shape {list(shape.parts)} is not a rectangle")
    return shape.r, (shape.parts[0] if shape.parts else 0)


def ssyt_to_pp(t: SemistandardTableau, b: int) -> PlanePartition:
    """Send entry ``e`` in row ``i`` to ``b - e + i``.

    ``t`` must be a tableau of rectangular shape ``(c^a)`` with bound ``a + b``.
    """
    a, _ = _box_dims(t.filling.shape)
    if t.bound != a + b:
        raise BoundMismatch(f"tableau bound {t.bound} != a + b = {a + b}")
    rows = [[b - e + i for e in row] for i, row in enumerate(t.filling.rows, start=1)]
    return PlanePartition(Filling(t.filling.shape, rows), b)


def pp_to_ssyt(p: PlanePartition) -> SemistandardTableau:
    a, _ = _box_dims(p.filling.shape)
    b = p.ceiling
    rows = [[b - e + i for e in row] for i, row in enumerate(p.filling.rows, start=1)]
    return SemistandardTableau(Filling(p.filling.shape, rows), a + b)
