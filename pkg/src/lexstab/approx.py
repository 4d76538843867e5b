"""Stable generator counts of the lex approximations of an ideal.

``b_d`` is the number of minimal generators of degree at most ``d`` that the
lex ideal with the Hilbert function of ``I R^(N)`` has for all large ``N``.
Starting from ``b_0 = 0``,

    b_{d+1} = c_{-(d+1)} + sum_{j=1}^{d} (-1)^(d-j) * bcp(b_j + 1, d - j + 2).

:func:`a_by_difference` recomputes each increment without that closed form,
as the constant difference between the extended Hilbert function and the
closed-form Hilbert function of the universal lex ideal built so far.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bigcomb import bcp
from .errors import ImproperCoefficients, InputError, NegativeGeneratorCount
from .lcbc import CoeffVector, stable_polynomial
from .unilex import hf_from_b_polynomial

__all__ = ["ApproxSequence", "b_sequence", "next_b", "a_by_difference"]


@dataclass(frozen=True)
class ApproxSequence:
    d_max: int
    a: tuple[int, ...]  # a_1 .. a_dmax
    b: tuple[int, ...]  # b_0 .. b_dmax
    source: CoeffVector

    def a_at(self, d: int) -> int:
        return self.a[d - 1]

    def to_json(self) -> dict:
        return {"a": [str(x) for x in self.a], "b": [str(x) for x in self.b]}


def _check_proper(c: CoeffVector) -> None:
    bad = [s for s in c.support if s >= 0]
    if bad:
        raise ImproperCoefficients(f"c_s must vanish for s >= 0; nonzero at s={sorted(bad)}")


def next_b(c: CoeffVector, b: Sequence[int], bottom_shift: int = 2) -> int:
    """``b_{d+1}`` from ``b = [b_1, ..., b_d]``.

    ``bottom_shift`` is the offset in ``bcp(b_j + 1, d - j + bottom_shift)``;
    only the default 2 is correct (0 gives a wrong variant that exists for
    regression testing).
    """
    d = len(b)
    total = c[-(d + 1)]
    for j in range(1, d + 1):
        term = bcp(b[j - 1] + 1, d - j + bottom_shift)
        total += term if (d - j) % 2 == 0 else -term
    return total


def b_sequence(c: CoeffVector, d_max: int) -> ApproxSequence:
    if d_max < 1:
        raise InputError(f"d_max must be >= 1, got {d_max}")
    _check_proper(c)
    bs: list[int] = []
    a: list[int] = []
    prev = 0
    for d in range(1, d_max + 1):
        cur = next_b(c, bs)
        if cur < prev:
            raise NegativeGeneratorCount(d, cur - prev)
        a.append(cur - prev)
        bs.append(cur)
        prev = cur
    return ApproxSequence(d_max, tuple(a), (0, *bs), c)


def a_by_difference(c: CoeffVector, b_prefix: Sequence[int], d: int) -> int:
    """``a_{d+1}`` as the constant term of ``G_{d+1}(N) - L_{d+1}(N)``.

    ``G`` is the extended Hilbert function of ``c`` and ``L`` the Hilbert
    function of the universal lex ideal with counts ``b_prefix = [b_1..b_d]``;
    both are taken in polynomial form and evaluated at ``N = 0``.
    """
    _check_proper(c)
    if len(b_prefix) != d:
        raise InputError(f"b_prefix must hold b_1..b_{d}, got {len(b_prefix)} values")
    a = stable_polynomial(c, d + 1)(0) - hf_from_b_polynomial(b_prefix, 0, d + 1)
    if a < 0:
        raise NegativeGeneratorCount(d + 1, a)
    return a
