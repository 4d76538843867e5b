"""Exact binomial machinery on Python integers.

Two binomial functions are used throughout:

* ``bco(n, r)`` is the ordinary binomial coefficient, extended by zero whenever
  ``n < 0``, ``r < 0`` or ``r > n``.
* ``bcp(n, r)`` is the polynomial binomial ``n(n-1)...(n-r+1) / r!``, defined
  for every integer ``n`` and every ``r >= 0``.

Both agree for ``n >= 0``.  Nothing here touches floating point, and nothing is
cached: arguments as large as 10**85 with small ``r`` are evaluated directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "bco",
    "bcp",
    "MacaulayRep",
    "macaulay_rep",
    "macaulay_growth",
]


def bco(n: int, r: int) -> int:
    """Binomial coefficient, zero outside ``0 <= r <= n``."""
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def bcp(n: int, r: int) -> int:
    """Polynomial binomial ``(1/r!) * prod_{j<r} (n - j)``; ``bcp(n, 0) == 1``."""
    if r < 0:
        raise InputError(f"bcp needs r >= 0, got r={r}")
    if 0 <= n < r:
        return 0
    num = 1
    for j in range(r):
        num *= n - j
    den = math.factorial(r)
    q, rem = divmod(num, den)
    # r consecutive integers always contain a multiple of r!
    assert rem == 0, (n, r)
    return q


@dataclass(frozen=True)
class MacaulayRep:
    """``m = sum(bco(a, i) for a, i in terms)`` with strictly decreasing tops."""

    degree: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(bco(a, i) for a, i in self.terms)

    def growth(self) -> int:
        return sum(bco(a + 1, i + 1) for a, i in self.terms)

    def is_valid(self) -> bool:
        expect = self.degree
        prev_top = None
        for a, i in self.terms:
            if i != expect or a < i:
                return False
            if prev_top is not None and a >= prev_top:
                return False
            prev_top = a
            expect -= 1
        return expect >= 0


def _largest_top(m: int, i: int) -> int:
    """Largest ``a >= i`` with ``bco(a, i) <= m``; needs ``m >= 1``."""
    lo, hi = i, i + 1
    while bco(hi, i) <= m:
        lo, hi = hi, 2 * hi
    # invariant: bco(lo, i) <= m < bco(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if bco(mid, i) <= m:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(m: int, d: int) -> MacaulayRep:
    """Greedy d-th Macaulay representation of ``m``."""
    if m < 0 or d < 1:
        raise InputError(f"macaulay_rep needs m >= 0 and d >= 1, got m={m}, d={d}")
    terms = []
    rest = m
    i = d
    while rest > 0:
        # i >= 1 here: at i == 1 the top a equals rest and clears it
        a = _largest_top(rest, i)
        terms.append((a, i))
        rest -= bco(a, i)
        i -= 1
    return MacaulayRep(d, tuple(terms))


def macaulay_growth(m: int, d: int) -> int:
    """Macaulay's bound ``m^<d>``: the largest possible quotient dimension in
    degree ``d + 1`` given quotient dimension ``m`` in degree ``d``, attained by
    the lex ideal generated by the degree-``d`` lex segment."""
    return macaulay_rep(m, d).growth()
