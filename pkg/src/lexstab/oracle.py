"""Direct construction of the lex ideal with the Hilbert function of ``I R^(N)``.

This is ground truth for :mod:`lexstab.approx` and shares none of its
formulas.  Two modes are available:

* explicit: walk each degree in lex-descending order and keep the top
  ``dim_degree(I, N, t)`` monomials, recording the ones that are not
  multiples of the previous degree as new generators;
* arithmetic: Macaulay's growth bound on quotient dimensions gives the same
  counts without listing monomials, so ``N`` may be in the hundreds.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .bigcomb import macaulay_growth
from .errors import (
    EnumerationBudgetExceeded,
    InfeasibleDimension,
    InputError,
    NegativeGeneratorCount,
    NotStabilized,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    dim_degree,
    iter_lex_desc,
    lex_rank,
    minimalize,
    num_monomials,
)

__all__ = [
    "DegreeRecord",
    "LexApproxResult",
    "lex_approx_explicit",
    "lex_approx_macaulay",
    "StableResult",
    "stabilization",
]

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class DegreeRecord:
    t: int
    dim_target: int
    a_t: int
    generators: tuple[Monomial, ...] | None = None


@dataclass(frozen=True)
class LexApproxResult:
    ideal: MonomialIdeal
    N: int
    mode: str
    per_degree: tuple[DegreeRecord, ...]

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(r.a_t for r in self.per_degree)

    @property
    def b(self) -> tuple[int, ...]:
        out = [0]
        for r in self.per_degree:
            out.append(out[-1] + r.a_t)
        return tuple(out)

    @property
    def generators(self) -> list[Monomial]:
        if self.mode != "explicit":
            raise InputError("generators are only materialized in explicit mode")
        return [g for r in self.per_degree for g in r.generators]

    def lex_ideal(self) -> MonomialIdeal:
        return minimalize(self.generators, self.N)

    def to_json(self) -> dict:
        rows = []
        for r in self.per_degree:
            row = {"t": r.t, "dim_target": str(r.dim_target), "a_t": str(r.a_t)}
            if r.generators is not None:
                row["generators"] = [list(g.padded(self.N)) for g in r.generators]
            rows.append(row)
        return {
            "mode": self.mode,
            "N": self.N,
            "a": [str(x) for x in self.a],
            "b": [str(x) for x in self.b],
            "per_degree": rows,
        }


def _check_n(I: MonomialIdeal, N: int, d_max: int) -> None:
    if N < I.num_vars:
        raise InputError(f"N={N} is smaller than the ideal's {I.num_vars} variables")
    if d_max < 1:
        raise InputError(f"d_max must be >= 1, got {d_max}")


def lex_approx_explicit(I: MonomialIdeal, N: int, d_max: int,
                        budget: int = DEFAULT_BUDGET) -> LexApproxResult:
    _check_n(I, N, d_max)
    size = num_monomials(N, d_max)
    if size > budget:
        raise EnumerationBudgetExceeded(
            f"degree {d_max} in {N} variables has {size} monomials (budget {budget})"
        )
    records = []
    prev: set[tuple[int, ...]] = set()
    prev_last: tuple[int, ...] | None = None
    for t in range(1, d_max + 1):
        target = dim_degree(I, N, t)
        total = num_monomials(N, t)
        if not 0 <= target <= total:
            raise InfeasibleDimension(f"degree {t}: target {target} outside [0, {total}]")
        if prev_last is not None:
            # every multiple of the previous segment is >= prev_last * x_N in lex
            floor = Monomial(prev_last[:-1] + (prev_last[-1] + 1,))
            if lex_rank(floor, N) >= target:
                raise InfeasibleDimension(
                    f"degree {t}: multiples of degree {t - 1} exceed target {target}"
                )
        cur: set[tuple[int, ...]] = set()
        new = []
        last = None
        it = iter_lex_desc(N, t)
        for _ in range(target):
            m = next(it)
            k = max(i for i, e in enumerate(m) if e)
            # in a lex segment, m is a multiple iff m / x_last is in it
            q = m[:k] + (m[k] - 1,) + m[k + 1:]
            if q not in prev:
                new.append(Monomial(m))
            cur.add(m)
            last = m
        records.append(DegreeRecord(t, target, len(new), tuple(new)))
        prev, prev_last = cur, last
    return LexApproxResult(I, N, "explicit", tuple(records))


def lex_approx_macaulay(I: MonomialIdeal, N: int, d_max: int) -> LexApproxResult:
    """Generator counts from quotient dimensions ``q_t``:
    ``a_1 = dim I_1`` and ``a_t = q_{t-1}^<t-1> - q_t``."""
    _check_n(I, N, d_max)
    records = []
    q_prev = None
    for t in range(1, d_max + 1):
        dim = dim_degree(I, N, t)
        q = num_monomials(N, t) - dim
        if q < 0:
            raise InfeasibleDimension(f"degree {t}: ideal dimension {dim} exceeds the ring")
        a = dim if t == 1 else macaulay_growth(q_prev, t - 1) - q
        if a < 0:
            raise NegativeGeneratorCount(t, a)
        records.append(DegreeRecord(t, dim, a))
        q_prev = q
    return LexApproxResult(I, N, "macaulay", tuple(records))


@dataclass(frozen=True)
class StableResult:
    a: tuple[int, ...]
    witnesses: tuple[int, ...]

    @property
    def b(self) -> tuple[int, ...]:
        out = [0]
        for x in self.a:
            out.append(out[-1] + x)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "a": [str(x) for x in self.a],
            "b": [str(x) for x in self.b],
            "witnesses": list(self.witnesses),
        }


def _runs(I: MonomialIdeal, d_max: int, Ns: Sequence[int]) -> list[tuple[int, ...]]:
    return [lex_approx_macaulay(I, N, d_max).a for N in Ns]


def stabilization(I: MonomialIdeal, d_max: int, margin: int = 4,
                  max_rounds: int = 64) -> StableResult:
    """Common generator counts over ``N = b_dmax + 1 .. b_dmax + margin``.

    ``b_dmax`` is not known in advance: guess, run, and move the window to
    just past the count found until the window and the count agree.
    """
    if d_max < 1 or margin < 1:
        raise InputError("stabilization needs d_max >= 1 and margin >= 1")
    guess = 0
    visited = set()
    for _ in range(max_rounds):
        N0 = max(I.num_vars, guess + 1)
        window = list(range(N0, N0 + margin))
        runs = _runs(I, d_max, window)
        b = sum(runs[0])
        agree = all(r == runs[0] for r in runs)
        settled = N0 == max(I.num_vars, b + 1)
        log.debug("window %s: b=%s agree=%s", window, b, agree)
        if settled or N0 in visited:
            if not agree:
                detail = ", ".join(f"N={N}: {r}" for N, r in zip(window, runs))
                raise NotStabilized(f"generator counts differ across the window ({detail})")
            if N0 > b:
                return StableResult(runs[0], tuple(window))
        visited.add(N0)
        guess = b
    raise NotStabilized(f"no self-consistent window found in {max_rounds} rounds")
