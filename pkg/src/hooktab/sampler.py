"""Exact uniform samplers for bounded tableaux and boxed plane partitions.

Random tableaux come from running the forward bijection on a uniformly
random content tabloid and dropping the hook tabloid.  Plane partitions in
an ``a x b x c`` box come from :func:`algorithm_pp`, the deformation of the same
procedure under ``e -> b - e + i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .filling import (BoxFilling, ContentTabloid, Filling, InvalidFilling,
                      PlanePartition, SemistandardTableau)
from .jdt import count_forward_moves
from .shape import Partition, rectangle

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class BoundTooSmall(ValueError):
    pass


class NegativeDimension(ValueError):
    pass


class InvalidInput(ValueError):
    pass


def mix64(z: int) -> int:
    """The SplitMix64 finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def split_seed(seed: int, index: int) -> int:
    """Seed for worker/sample ``index`` derived from a master seed."""
    return mix64((seed & MASK64) ^ mix64((index + 1) * GOLDEN))


def bounded_draw(next_word: Callable[[], int], lo: int, hi: int, bits: int = 64) -> int:
    """Uniform integer in ``[lo, hi]`` from ``bits``-bit words, by rejection.

    Words below ``2**bits mod n`` are rejected, so the accepted range is an
    exact multiple of ``n`` and there is no modulo bias.
    """
    n = hi - lo + 1
    if n <= 0:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if n == 1:
        return lo
    span = 1 << bits
    if n > span:
        raise ValueError("range wider than the word size")
    threshold = span % n
    while True:
        w = next_word()
        if w >= threshold:
            return lo + w % n


class Rng:
    """SplitMix64: 64 bits of state, identical output on every platform."""

    __slots__ = ("state", "seed")

    def __init__(self, seed: int = 0):
        self.seed = seed & MASK64
        self.state = self.seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return bounded_draw(self.next_u64, lo, hi)

    def split(self, index: int) -> Rng:
        return Rng(split_seed(self.seed, index))


@dataclass(frozen=True)
class SampleReport:
    value: object
    moves: int
    seed: int

    def to_json(self) -> dict:
        return {"seed": self.seed, "moves": self.moves, "value": self.value.filling.to_json()}


def _check_bound(lam: Partition, b: int) -> None:
    if b < lam.r:
        raise BoundTooSmall(f"bound {b} is smaller than the number of rows {lam.r}")


def random_content_tabloid(lam: Partition, b: int, rng: Rng) -> ContentTabloid:
    _check_bound(lam, b)
    rows = [[rng.randint(1 - (j - i), b) for j in range(1, p + 1)]
            for i, p in enumerate(lam.parts, start=1)]
    return ContentTabloid(Filling(lam, rows), b)


def hc_tableau(grid: list[list[int]], lam: Partition) -> int:
    """The forward bijection on ``grid`` in place with the hook tabloid dropped; returns the move count."""
    lengths = lam.parts
    moves = 0
    for i, j in reversed(lam.order):
        m, _, _ = count_forward_moves(grid, lengths, i - 1, j - 1)
        moves += m
    return moves


def sample_ssyt(lam: Partition, b: int, rng: Rng) -> SampleReport:
    C = random_content_tabloid(lam, b, rng)
    grid = C.filling.grid()
    moves = hc_tableau(grid, lam)
    return SampleReport(SemistandardTableau(Filling(lam, grid), b), moves, rng.seed)


def _pp_walk(grid: list[list[int]], a: int, c: int, p: int, q: int) -> int:
    s = grid[p][q]
    moves = 0
    while True:
        right = q + 1 < c
        below = p + 1 < a
        if right and below:
            x, y = grid[p][q + 1], grid[p + 1][q]
            if s >= x and s >= y:
                break
            if x - 1 >= y:
                grid[p][q] = x - 1
                q += 1
            else:
                grid[p][q] = y
                p += 1
                s += 1
        elif right:
            x = grid[p][q + 1]
            if s >= x:
                break
            grid[p][q] = x - 1
            q += 1
        elif below:
            y = grid[p + 1][q]
            if s >= y:
                break
            grid[p][q] = y
            p += 1
            s += 1
        else:
            break
        moves += 1
    grid[p][q] = s
    return moves


def algorithm_pp(F: BoxFilling | Filling, dims: Optional[tuple[int, int, int]] = None,
                 seed: int = 0) -> SampleReport:
    """Sort a box filling into a plane partition.

    Distinguished cells run backward from ``(a, c)``.  A missing right or
    bottom neighbour never blocks stopping and forces the other move.
    """
    if not isinstance(F, BoxFilling):
        if dims is None:
            raise InvalidInput("a bare filling needs dims=(a, b, c)")
        try:
            F = BoxFilling(F, tuple(dims))
        except InvalidFilling as exc:
            raise InvalidInput(str(exc)) from exc
    a, b, c = F.dims
    lam = F.filling.shape
    grid = F.filling.grid()
    moves = 0
    for i, j in reversed(lam.order):
        moves += _pp_walk(grid, a, c, i - 1, j - 1)
    return SampleReport(PlanePartition(Filling(lam, grid), b), moves, seed)


def random_box_filling(a: int, b: int, c: int, rng: Rng) -> BoxFilling:
    if min(a, b, c) < 0:
        raise NegativeDimension(f"box dimensions must be nonnegative, got {(a, b, c)}")
    rows = [[rng.randint(i - a, b + j - 1) for j in range(1, c + 1)] for i in range(1, a + 1)]
    return BoxFilling(Filling(rectangle(a, c), rows if c else []), (a, b, c))


def sample_pp(a: int, b: int, c: int, rng: Rng) -> SampleReport:
    F = random_box_filling(a, b, c, rng)
    return algorithm_pp(F, seed=rng.seed)


def sample_many(kind: str, count: int, seed: int, **params) -> Iterator[SampleReport]:
    """``count`` independent samples, sample ``k`` drawn from ``split_seed(seed, k)``."""
    for k in range(count):
        rng = Rng(split_seed(seed, k))
        if kind == "ssyt":
            yield sample_ssyt(params["shape"], params["bound"], rng)
        elif kind == "pp":
            yield sample_pp(*params["box"], rng)
        else:
            raise ValueError(f"unknown sampler {kind!r}")


def pp_move_bound(a: int, c: int) -> int:
    """``sum(binom(i, 2) for i in a..a+c-1)``, the worst-case move count scale."""
    if a < 1 or c < 1:
        raise ValueError("pp_move_bound needs a >= 1 and c >= 1")
    return sum(i * (i - 1) // 2 for i in range(a, a + c))

