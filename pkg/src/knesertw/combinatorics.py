"""Exact integer/rational helpers, colex ranking of k-subsets, certified logs.

Python's ``int`` and :class:`fractions.Fraction` are the arbitrary-precision
scalars used everywhere; nothing in this module touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

__all__ = [
    "binom",
    "falling",
    "KSubset",
    "colex_rank",
    "colex_unrank",
    "iter_ksubsets",
    "RationalInterval",
    "ln_enclosure",
    "exp_enclosure",
    "fmt_exact",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling(a: int, m: int) -> int:
    """Falling factorial a (a-1) ... (a-m+1); ``falling(a, 0) == 1``."""
    out = 1
    for i in range(m):
        out *= a - i
    return out


@dataclass(frozen=True)
class KSubset:
    """A k-subset of [n] = {1, ..., n}, stored sorted."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if len(els) < 1:
            raise ValueError("k-subset must be non-empty")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")
        if els[0] < 1 or els[-1] > self.n:
            raise ValueError(f"elements must lie in [1, {self.n}]: {els}")

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        """Bitmask with bit (i-1) set for every element i."""
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def colex_rank(s: KSubset | Sequence[int], n: int | None = None) -> int:
    """0-based colexicographic rank: sum of C(s_i - 1, i) for i = 1..k.

    Accepts a :class:`KSubset` or a plain sorted sequence (validated against
    ``n`` when given).
    """
    if not isinstance(s, KSubset):
        s = KSubset(tuple(s), n if n is not None else max(s, default=0))
    return sum(binom(e - 1, i) for i, e in enumerate(s.elements, start=1))


def colex_unrank(r: int, k: int, n: int) -> KSubset:
    """Inverse of :func:`colex_rank`."""
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = binom(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total})")
    out = []
    hi = n
    for i in range(k, 0, -1):
        # largest e with C(e - 1, i) <= r
        e = hi
        while binom(e - 1, i) > r:
            e -= 1
        out.append(e)
        r -= binom(e - 1, i)
        hi = e - 1
    return KSubset(tuple(reversed(out)), n)


def iter_ksubsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of [n] in colex order (rank 0 first)."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield ()
        return
    c = list(range(1, k + 1))
    while True:
        yield tuple(c)
        # colex successor: bump the first element that has room
        j = 0
        while j < k - 1 and c[j] + 1 == c[j + 1]:
            j += 1
        if j == k - 1 and c[j] == n:
            return
        c[j] += 1
        for i in range(j):
            c[i] = i + 1


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c) -> "RationalInterval":
        c = Fraction(c)
        a, b = self.lo * c, self.hi * c
        return RationalInterval(min(a, b), max(a, b))

    def square(self) -> "RationalInterval":
        if self.lo >= 0:
            return RationalInterval(self.lo**2, self.hi**2)
        if self.hi <= 0:
            return RationalInterval(self.hi**2, self.lo**2)
        return RationalInterval(Fraction(0), max(self.lo**2, self.hi**2))


def _round_out(lo: Fraction, hi: Fraction, bits: int) -> RationalInterval:
    scale = 1 << bits
    return RationalInterval(
        Fraction(math.floor(lo * scale), scale),
        Fraction(math.ceil(hi * scale), scale),
    )


def _atanh_enclosure(x: Fraction, eps: Fraction) -> RationalInterval:
    # 0 <= x <= 1/3; tail of sum x^(2j+1)/(2j+1) bounded by a geometric series
    if x == 0:
        return RationalInterval(Fraction(0), Fraction(0))
    x2 = x * x
    power = x
    total = Fraction(0)
    j = 0
    while True:
        total += power / (2 * j + 1)
        j += 1
        power *= x2
        tail = power / ((2 * j + 1) * (1 - x2))
        if tail <= eps:
            return RationalInterval(total, total + tail)


def ln_enclosure(t, eps=Fraction(1, 10**6)) -> RationalInterval:
    """Certified rational interval around ln(t), width at most ``eps``.

    Uses ln t = m ln 2 + ln(t / 2^m) with both logs written as
    2 atanh((y - 1)/(y + 1)), so every series argument is at most 1/3.
    Endpoints are rounded outward onto a dyadic grid.
    """
    t = Fraction(t)
    eps = Fraction(eps)
    if t < 1:
        raise ValueError(f"ln_enclosure needs t >= 1, got {t}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = math.floor(t).bit_length() - 1
    y = t / (1 << m)
    series_eps = eps / (8 * (m + 1))
    ln2 = _atanh_enclosure(Fraction(1, 3), series_eps).scale(2)
    lny = _atanh_enclosure((y - 1) / (y + 1), series_eps).scale(2)
    raw = ln2.scale(m) + lny
    bits = 2
    while Fraction(1, 1 << bits) > eps / 4:
        bits += 1
    return _round_out(raw.lo, raw.hi, bits)


def exp_enclosure(r, eps=Fraction(1, 10**12)) -> RationalInterval:
    """Certified rational interval around exp(r) for rational ``r``.

    Taylor series with the ratio-test tail bound. Used as an independent
    cross-check of :func:`ln_enclosure`.
    """
    r = Fraction(r)
    eps = Fraction(eps)
    if r < 0:
        inv = exp_enclosure(-r, eps / 4)
        return RationalInterval(1 / inv.hi, 1 / inv.lo)
    total = Fraction(0)
    term = Fraction(1)
    j = 0
    while True:
        total += term
        j += 1
        term = term * r / j
        if j + 1 > 2 * r:
            tail = term / (1 - r / (j + 1))
            if tail <= eps:
                return RationalInterval(total, total + tail)


def fmt_exact(x) -> str:
    """Serialize an int or Fraction as ``"123"`` or ``"num/den"``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not exact numbers")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
