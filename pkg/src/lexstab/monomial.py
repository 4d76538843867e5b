"""Monomials in lex order, monomial ideals, and their Hilbert data.

Variables are ``x1 > x2 > ...``.  A :class:`Monomial` stores its exponent
vector with trailing zeros stripped, so the same monomial compares equal in
every ambient ring; the number of variables ``N`` is always passed explicitly.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bigcomb import bco
from .errors import InputError
from .lcbc import CoeffVector, HFTable, evaluate

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "lex_cmp",
    "minimalize",
    "hilbert_numerator",
    "dim_degree",
    "brute_dim_degree",
    "hf_table",
    "num_monomials",
    "lex_rank",
    "lex_unrank",
    "iter_lex_desc",
    "is_lex_in_degree",
    "is_universal_lex",
]

IE_CUTOFF = 20


def _strip(exps: Iterable[int]) -> tuple[int, ...]:
    out = list(exps)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        exps = _strip(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise InputError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_vars(cls, *indices: int) -> "Monomial":
        """``Monomial.from_vars(1, 3, 3)`` is ``x1*x3^2`` (1-based indices)."""
        if not indices:
            return cls(())
        if min(indices) < 1:
            raise InputError("variable indices start at 1")
        exps = [0] * max(indices)
        for i in indices:
            exps[i - 1] += 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def nvars(self) -> int:
        """Index of the last variable that occurs (0 for the unit)."""
        return len(self.exponents)

    def padded(self, N: int) -> tuple[int, ...]:
        if self.nvars > N:
            raise InputError(f"{self} does not live in {N} variables")
        return self.exponents + (0,) * (N - self.nvars)

    def divides(self, other: "Monomial") -> bool:
        if self.nvars > other.nvars:
            return False
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        n = max(self.nvars, other.nvars)
        a, b = self.padded(n), other.padded(n)
        return Monomial(tuple(x + y for x, y in zip(a, b)))

    def lcm(self, other: "Monomial") -> "Monomial":
        n = max(self.nvars, other.nvars)
        a, b = self.padded(n), other.padded(n)
        return Monomial(tuple(max(x, y) for x, y in zip(a, b)))

    def __lt__(self, other: "Monomial") -> bool:
        return lex_cmp(self, other, graded=True) < 0

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({str(self)})"


def lex_cmp(a: Monomial, b: Monomial, graded: bool = False) -> int:
    """-1, 0 or 1 as ``a`` is lex-smaller, equal or greater than ``b``.

    With ``graded=True`` degree is compared first.
    """
    if graded and a.degree != b.degree:
        return -1 if a.degree < b.degree else 1
    # stripped tuples compare lexicographically exactly like padded ones
    if a.exponents == b.exponents:
        return 0
    return 1 if a.exponents > b.exponents else -1


def canonical_order(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """By degree, then lex-descending."""
    return tuple(sorted(gens, key=lambda m: (m.degree, tuple(-e for e in m.exponents))))


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise InputError("an ideal needs num_vars >= 1")
        for g in self.generators:
            if g.nvars > self.num_vars:
                raise InputError(f"generator {g} uses more than {self.num_vars} variables")

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def to_json(self) -> dict:
        return {
            "variables": self.num_vars,
            "generators": [list(g.padded(self.num_vars)) for g in self.generators],
        }

    @classmethod
    def from_json(cls, obj) -> "MonomialIdeal":
        try:
            h = int(obj["variables"])
            gens = [Monomial(tuple(int(e) for e in g)) for g in obj["generators"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad monomial ideal spec: {exc}") from None
        for raw in obj["generators"]:
            if len(raw) > h:
                raise InputError(f"generator {raw} has more than {h} exponents")
        return minimalize(gens, h)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.generators)) + ")"


def minimalize(gens: Iterable[Monomial], num_vars: int | None = None) -> MonomialIdeal:
    """Drop every generator divisible by another one."""
    uniq = set(gens)
    if any(g.degree == 0 for g in uniq):
        raise InputError("the unit monomial cannot be a generator of a proper ideal")
    # after sorting by degree a divisor always precedes its multiples
    kept: list[Monomial] = []
    for g in sorted(uniq, key=lambda m: m.degree):
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    if num_vars is None:
        num_vars = max((g.nvars for g in kept), default=1)
    return MonomialIdeal(num_vars, canonical_order(kept))


# ---------------------------------------------------------------------------
# Hilbert numerator
# ---------------------------------------------------------------------------

def _pad_all(gens: Sequence[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    return [g + (0,) * (n - len(g)) for g in gens]


def _minimal_tuples(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    kept: list[tuple[int, ...]] = []
    for g in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return kept


def _ideal_numerator_ie(gens: Sequence[tuple[int, ...]]) -> dict[int, int]:
    """``sum over nonempty S of (-1)^(|S|+1) z^deg(lcm S)``, merging equal lcms."""
    terms: dict[tuple[int, ...], int] = {}
    for g in gens:
        new = dict(terms)
        new[g] = new.get(g, 0) + 1
        for m, coef in terms.items():
            l = tuple(max(a, b) for a, b in zip(m, g))
            new[l] = new.get(l, 0) - coef
        terms = {m: c for m, c in new.items() if c}
    out: dict[int, int] = {}
    for m, coef in terms.items():
        k = sum(m)
        out[k] = out.get(k, 0) + coef
    return {k: v for k, v in out.items() if v}


def _quotient_numerator_pivot(gens: list[tuple[int, ...]]) -> dict[int, int]:
    """Numerator of the Hilbert series of ``R/I`` by pivot splitting:
    ``Q(I) = Q(I + (p)) + z^deg(p) Q(I : p)`` with ``p`` a variable power."""
    if not gens:
        return {0: 1}
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    i = max(range(n), key=lambda j: counts[j])
    if counts[i] <= 1:
        # pairwise coprime generators: product of (1 - z^deg g)
        poly = {0: 1}
        for g in gens:
            k = sum(g)
            nxt = dict(poly)
            for a, v in poly.items():
                nxt[a + k] = nxt.get(a + k, 0) - v
            poly = {a: v for a, v in nxt.items() if v}
        return poly
    e = min(g[i] for g in gens if g[i])
    p = tuple(e if j == i else 0 for j in range(n))
    with_p = _minimal_tuples([g for g in gens if g[i] < e] + [p])
    colon = _minimal_tuples(
        tuple(max(a - (e if j == i else 0), 0) for j, a in enumerate(g)) for g in gens
    )
    left = _quotient_numerator_pivot(with_p)
    right = _quotient_numerator_pivot(colon)
    out = dict(left)
    for a, v in right.items():
        out[a + e] = out.get(a + e, 0) + v
    return {a: v for a, v in out.items() if v}


def _numerator_terms(I: MonomialIdeal, method: str) -> dict[int, int]:
    gens = _pad_all([g.exponents for g in I.generators], I.num_vars)
    if method == "auto":
        method = "ie" if len(gens) <= IE_CUTOFF else "pivot"
    if method == "ie":
        return _ideal_numerator_ie(gens)
    if method == "pivot":
        q = _quotient_numerator_pivot(gens)
        out = {k: -v for k, v in q.items() if k != 0}
        if q.get(0, 0) != 1:
            out[0] = 1 - q.get(0, 0)
        return out
    raise InputError(f"unknown numerator method {method!r}")


@functools.lru_cache(maxsize=512)
def _cached_numerator(I: MonomialIdeal, method: str) -> CoeffVector:
    return CoeffVector({-k: v for k, v in _numerator_terms(I, method).items()})


def hilbert_numerator(I: MonomialIdeal, method: str = "auto") -> CoeffVector:
    """Extended Hilbert function of ``I`` as a coefficient vector.

    ``method`` is ``"ie"`` (inclusion-exclusion over lcm's), ``"pivot"``
    (recursive splitting) or ``"auto"`` (the former up to 20 generators).
    """
    return _cached_numerator(I, method)


def num_monomials(N: int, t: int) -> int:
    """Number of degree-``t`` monomials in ``N`` variables, correct also at N = 0."""
    if N == 0:
        return 1 if t == 0 else 0
    return bco(N + t - 1, N - 1)


def dim_degree(I: MonomialIdeal, N: int, t: int) -> int:
    """``dim_K [I R^(N)]_t`` from the numerator."""
    if N < I.num_vars:
        raise InputError(f"dim_degree needs N >= {I.num_vars}, got N={N}")
    if t < 0:
        return 0
    return evaluate(hilbert_numerator(I), N, t)


def iter_lex_desc(N: int, t: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors (length ``N``) of degree ``t``, lex-largest first."""
    # nondecreasing index tuples in ascending order are exactly lex-descending monomials
    for combo in itertools.combinations_with_replacement(range(N), t):
        exps = [0] * N
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def brute_dim_degree(I: MonomialIdeal, N: int, t: int) -> int:
    """Count degree-``t`` members of ``I R^(N)`` one monomial at a time."""
    if N < I.num_vars:
        raise InputError(f"need N >= {I.num_vars}")
    gens = _pad_all([g.exponents for g in I.generators], N)
    count = 0
    for m in iter_lex_desc(N, t):
        if any(all(a <= b for a, b in zip(g, m)) for g in gens):
            count += 1
    return count


def hf_table(I: MonomialIdeal, t_max: int) -> HFTable:
    """Hilbert function of ``I`` in its own ``h`` variables, by enumeration."""
    return HFTable(I.num_vars, tuple(brute_dim_degree(I, I.num_vars, t) for t in range(t_max + 1)))


def lex_unrank(N: int, t: int, k: int) -> Monomial:
    """The ``(k+1)``-th largest degree-``t`` monomial in ``N`` variables."""
    if N < 1 or t < 0:
        raise InputError(f"lex_unrank needs N >= 1 and t >= 0, got N={N}, t={t}")
    total = num_monomials(N, t)
    if not 0 <= k < total:
        raise InputError(f"rank {k} outside [0, {total})")
    exps = []
    rest = t
    for pos in range(N - 1):
        tail = N - pos - 1
        for e in range(rest, -1, -1):
            block = num_monomials(tail, rest - e)
            if k < block:
                break
            k -= block
        exps.append(e)
        rest -= e
    exps.append(rest)
    return Monomial(tuple(exps))


def lex_rank(m: Monomial, N: int) -> int:
    """Inverse of :func:`lex_unrank` for monomials living in ``N`` variables."""
    exps = m.padded(N)
    rest = m.degree
    k = 0
    for pos in range(N - 1):
        tail = N - pos - 1
        e = exps[pos]
        for bigger in range(rest, e, -1):
            k += num_monomials(tail, rest - bigger)
        rest -= e
    return k


def is_lex_in_degree(gens: Sequence[Monomial], N: int, t: int) -> bool:
    """Whether the degree-``t`` part of ``(gens) R^(N)`` is a lex-upper segment."""
    padded = _pad_all([g.exponents for g in gens], N)
    seen_gap = False
    for m in iter_lex_desc(N, t):
        member = any(all(a <= b for a, b in zip(g, m)) for g in padded)
        if member and seen_gap:
            return False
        if not member:
            seen_gap = True
    return True


def _matches_gamma_pattern(gens: Sequence[Monomial]) -> bool:
    from .unilex import GammaSpec, generators_from_gamma

    by_deg: dict[int, int] = {}
    for g in gens:
        by_deg[g.degree] = by_deg.get(g.degree, 0) + 1
    gamma = GammaSpec(tuple(sorted(by_deg.items())))
    return set(generators_from_gamma(gamma)) == set(gens)


def is_universal_lex(gens: Iterable[Monomial], N_max: int, fast_path: bool = True) -> bool:
    """Whether ``(gens)`` stays lex in every ring with up to ``N_max`` variables.

    Generators of degree at most ``D`` make every higher degree a product of a
    lex segment with the linear forms, so degrees ``<= D`` suffice.  The fast
    path accepts the explicit universal-lex pattern without enumeration.
    """
    gens = list(gens)
    if not gens:
        return True
    if fast_path and _matches_gamma_pattern(gens):
        return True
    n0 = max(1, max(g.nvars for g in gens))
    D = max(g.degree for g in gens)
    for N in range(n0, N_max + 1):
        for t in range(1, D + 1):
            if not is_lex_in_degree(gens, N, t):
                return False
    return True
