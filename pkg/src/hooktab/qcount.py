"""Exact q-counting: Laurent polynomials, the hook-content product, brute-force enumerators.

Everything here is integer arithmetic.  The enumerators are the
independent oracle layer: they list fillings straight from the defining
inequalities and never call the bijection.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .filling import Filling
from .shape import Partition, cell_stats, rectangle

DEFAULT_CAP = 10**7


class BoundTooSmall(ValueError):
    pass


class NonExactDivision(ArithmeticError):
    pass


class CapExceeded(RuntimeError):
    pass


class LaurentPoly:
    """Sparse integer polynomial in ``q`` with possibly negative exponents."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(v) for e, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def span(cls, lo: int, hi: int) -> LaurentPoly:
        """``q^lo + q^(lo+1) + ... + q^hi``."""
        return cls({e: 1 for e in range(lo, hi + 1)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def low(self) -> Optional[int]:
        return min(self._c) if self._c else None

    def high(self) -> Optional[int]:
        return max(self._c) if self._c else None

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Long division from the lowest term up; a nonzero remainder raises."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        dlow, dhigh = divisor.low(), divisor.high()
        lead = divisor._c[dlow]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        top = self.high()
        while rem:
            e = min(rem)
            if top is not None and e + (dhigh - dlow) > top:
                break
            v = rem[e]
            if v % lead:
                break
            k = v // lead
            qexp = e - dlow
            quot[qexp] = k
            for de, dv in divisor._c.items():
                t = qexp + de
                nv = rem.get(t, 0) - k * dv
                if nv:
                    rem[t] = nv
                else:
                    rem.pop(t, None)
        if rem:
            raise NonExactDivision(f"{self} is not divisible by {divisor}")
        return LaurentPoly(quot)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if v > 0 else f"-{body}")
            else:
                out.append(("+ " if v > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, obj: dict | str) -> LaurentPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls({int(e): v for e, v in obj.items()})


q = LaurentPoly.monomial(1)


def one_minus_q_pow(k: int) -> LaurentPoly:
    return LaurentPoly({0: 1, k: -1})


def _check_bound(lam: Partition, b: int) -> None:
    if b < lam.r:
        raise BoundTooSmall(f"bound {b} is smaller than the number of rows {lam.r}")


def base_exponent(lam: Partition) -> int:
    """``sum(i * lam_i)``, the norm of the smallest tableau of shape ``lam``."""
    return sum(i * p for i, p in enumerate(lam.parts, start=1))


def hook_content_gf(lam: Partition, b: int) -> LaurentPoly:
    """``q^(sum i lam_i) * prod (1 - q^(b + c)) / (1 - q^h)`` expanded exactly."""
    _check_bound(lam, b)
    stats = [cell_stats(lam, cell) for cell in lam.order]
    num = LaurentPoly.monomial(base_exponent(lam))
    for st in stats:
        num = num * one_minus_q_pow(b + st.content)
    for st in stats:
        num = num.exact_div(one_minus_q_pow(st.hook))
    return num


# -- enumerators --------------------------------------------------------------

def _capped(it: Iterable[Filling], cap: int) -> Iterator[Filling]:
    for n, f in enumerate(it, start=1):
        if n > cap:
            raise CapExceeded(f"enumeration exceeds the cap of {cap} fillings")
        yield f


def _product_fillings(lam: Partition, ranges: list[range]) -> Iterator[Filling]:
    # ranges follow row-major cell order
    for vals in product(*ranges):
        rows, k = [], 0
        for p in lam.parts:
            rows.append(vals[k:k + p])
            k += p
        yield Filling(lam, rows)


def _row_major(lam: Partition) -> list[tuple[int, int]]:
    return [(i, j) for i, p in enumerate(lam.parts, start=1) for j in range(1, p + 1)]


def _ssyt(lam: Partition, b: int) -> Iterator[Filling]:
    cells = _row_major(lam)
    grid = [[0] * p for p in lam.parts]

    def fill(k: int) -> Iterator[Filling]:
        if k == len(cells):
            yield Filling(lam, grid)
            return
        i, j = cells[k]
        lo = 1
        if j > 1:
            lo = max(lo, grid[i - 1][j - 2])
        if i > 1:
            lo = max(lo, grid[i - 2][j - 1] + 1)
        for e in range(lo, b + 1):
            grid[i - 1][j - 1] = e
            yield from fill(k + 1)

    return fill(0)


def _pp(a: int, b: int, c: int) -> Iterator[Filling]:
    lam = rectangle(a, c)
    cells = _row_major(lam)
    grid = [[0] * c for _ in range(a)] if c else []

    def fill(k: int) -> Iterator[Filling]:
        if k == len(cells):
            yield Filling(lam, grid)
            return
        i, j = cells[k]
        hi = b
        if j > 1:
            hi = min(hi, grid[i - 1][j - 2])
        if i > 1:
            hi = min(hi, grid[i - 2][j - 1])
        for e in range(0, hi + 1):
            grid[i - 1][j - 1] = e
            yield from fill(k + 1)

    return fill(0)


def enumerate_fillings(kind: str, lam: Partition | None = None, b: int | None = None, *,
                       box: tuple[int, int, int] | None = None, cap: int = DEFAULT_CAP) -> Iterator[Filling]:
    """All fillings of one class, each exactly once.

    ``kind`` is ``ssyt``, ``content``, ``hook`` (shape ``lam``, bound ``b``)
    or ``pp`` (``box=(a, b, c)``).
    """
    if kind == "pp":
        if box is None:
            raise TypeError("pp enumeration needs box=(a, b, c)")
        a, bb, c = box
        if min(a, bb, c) < 0:
            raise ValueError("box dimensions must be nonnegative")
        return _capped(_pp(a, bb, c), cap)
    if lam is None:
        raise TypeError(f"{kind} enumeration needs a shape")
    order = _row_major(lam)
    if kind == "hook":
        ranges = [range(-st.arm, st.leg + 1) for st in (cell_stats(lam, c) for c in order)]
        return _capped(_product_fillings(lam, ranges), cap)
    _check_bound(lam, b)
    if kind == "content":
        ranges = [range(1 - (j - i), b + 1) for i, j in order]
        return _capped(_product_fillings(lam, ranges), cap)
    if kind == "ssyt":
        return _capped(_ssyt(lam, b), cap)
    raise ValueError(f"unknown class {kind!r}")


def gf_of(fillings: Iterable[Filling], weight: Callable[[Filling], int] | None = None) -> LaurentPoly:
    """``sum q^weight(f)``; the weight defaults to the norm."""
    acc: dict[int, int] = {}
    for f in fillings:
        w = weight(f) if weight else sum(map(sum, f.rows))
        acc[w] = acc.get(w, 0) + 1
    return LaurentPoly(acc)


# -- identity checks ----------------------------------------------------------

@dataclass
class IdentityCheck:
    which: str
    shape: Partition
    bound: int
    lhs: LaurentPoly
    rhs: LaurentPoly
    extra: dict[str, LaurentPoly] = field(default_factory=dict)
    passed: bool = False

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "shape": list(self.shape.parts),
            "bound": self.bound,
            "passed": self.passed,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "extra": {k: v.to_json() for k, v in self.extra.items()},
        }


def verify_identity(which: str, lam: Partition, b: int, *, cap: int = DEFAULT_CAP) -> IdentityCheck:
    """Compare a brute-force generating function with one of the product forms.

    ``1.1``: tableau gf against the expanded hook-content product.
    ``1.2``: cross-multiplied, tableau gf times the hook factors against
    the base monomial times the content factors.
    ``1.3``: tableau gf times the hook spans against the content spans.
    This also checks the content-tabloid gf and the tableau gf times the
    hook-tabloid gf.
    """
    _check_bound(lam, b)
    stats = [cell_stats(lam, cell) for cell in lam.order]
    ssyt = gf_of(enumerate_fillings("ssyt", lam, b, cap=cap))
    extra: dict[str, LaurentPoly] = {}
    if which == "1.1":
        lhs, rhs = ssyt, hook_content_gf(lam, b)
        ok = lhs == rhs
    elif which == "1.2":
        lhs = ssyt
        rhs = LaurentPoly.monomial(base_exponent(lam))
        for st in stats:
            lhs = lhs * one_minus_q_pow(st.hook)
            rhs = rhs * one_minus_q_pow(b + st.content)
        ok = lhs == rhs
    elif which == "1.3":
        lhs, rhs = ssyt, LaurentPoly.one()
        for st in stats:
            lhs = lhs * LaurentPoly.span(-st.arm, st.leg)
            rhs = rhs * LaurentPoly.span(1 - st.content, b)
        content = gf_of(enumerate_fillings("content", lam, b, cap=cap))
        hook = gf_of(enumerate_fillings("hook", lam, cap=cap))
        extra = {"content": content, "ssyt_times_hook": ssyt * hook}
        ok = lhs == rhs == content == ssyt * hook
    else:
        raise ValueError(f"unknown identity {which!r}; expected 1.1, 1.2 or 1.3")
    return IdentityCheck(which, lam, b, lhs, rhs, extra, ok)


@dataclass
class FiberCheck:
    shape: Partition
    bound: int
    expected_size: int
    histogram: dict[tuple, int]
    missing: list[tuple]
    unexpected: list[tuple]
    passed: bool

    def to_json(self) -> dict:
        sizes: dict[int, int] = {}
        for n in self.histogram.values():
            sizes[n] = sizes.get(n, 0) + 1
        return {
            "shape": list(self.shape.parts),
            "bound": self.bound,
            "expected_fiber": self.expected_size,
            "tableaux": len(self.histogram),
            "fiber_sizes": {str(k): v for k, v in sorted(sizes.items())},
            "missing": [list(map(list, t)) for t in self.missing],
            "unexpected": [list(map(list, t)) for t in self.unexpected],
            "passed": self.passed,
        }


def hook_product(lam: Partition) -> int:
    out = 1
    for cell in lam.order:
        out *= cell_stats(lam, cell).hook
    return out


def verify_fibers(lam: Partition, b: int, *, cap: int = DEFAULT_CAP) -> FiberCheck:
    """Push every content tabloid through the bijection and count preimages per tableau."""
    from .bijection import hc_forward
    from .filling import ContentTabloid

    hist: dict[tuple, int] = {}
    for C in enumerate_fillings("content", lam, b, cap=cap):
        T = hc_forward(ContentTabloid(C, b), check=False).tableau.filling.rows
        hist[T] = hist.get(T, 0) + 1
    want = {f.rows for f in enumerate_fillings("ssyt", lam, b, cap=cap)}
    expected = hook_product(lam)
    missing = sorted(want - hist.keys())
    unexpected = sorted(hist.keys() - want)
    ok = not missing and not unexpected and all(n == expected for n in hist.values())
    return FiberCheck(lam, b, expected, hist, missing, unexpected, ok)
