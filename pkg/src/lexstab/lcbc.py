"""Linear combinations of binomial coefficients (LCBC functions).

An extended Hilbert function is stored as a finitely supported map
``s -> c_s`` and evaluated as ``G(N, t) = sum_s c_s * bco(N+t+s-1, N-1)``.
With ``t = d`` held fixed, ``G`` agrees for every ``N >= 1`` with the polynomial
``G_d(N) = sum_{s >= -d} c_s * bcp(N+d+s-1, d+s)``, whose value at ``N = 0`` is
``c_{-d}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .bigcomb import bco, bcp
from .errors import FitError, InputError

__all__ = [
    "CoeffVector",
    "HFTable",
    "StablePolynomial",
    "evaluate",
    "extend_by_convolution",
    "stable_polynomial",
    "stabilization_bound",
    "fit",
    "ci_numerator",
    "from_betti",
]


@dataclass(frozen=True)
class CoeffVector:
    """Sparse integer vector ``s -> c_s``; zero entries are dropped."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(s): int(c) for s, c in dict(self.coeffs).items() if int(c) != 0}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    def __getitem__(self, s: int) -> int:
        return self.coeffs.get(s, 0)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CoeffVector):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __sub__(self, other: "CoeffVector") -> "CoeffVector":
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) - c
        return CoeffVector(out)

    @property
    def support(self) -> list[int]:
        return list(self.coeffs)

    @property
    def proper(self) -> bool:
        """True when ``c_s == 0`` for every ``s >= 0``."""
        return all(s < 0 for s in self.coeffs)

    @property
    def s_min(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    @property
    def s_max(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def numerator(self) -> dict[int, int]:
        """Hilbert-series numerator ``K(z)`` as ``{power: coefficient}``."""
        return {-s: c for s, c in self.coeffs.items()}

    def to_json(self) -> dict:
        return {"c": {str(s): str(c) for s, c in self.coeffs.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "CoeffVector":
        raw = obj["c"] if "c" in obj else obj
        if not isinstance(raw, Mapping):
            raise InputError('coefficient vector must be an object {"s": "c_s", ...}')
        try:
            return cls({int(s): int(c) for s, c in raw.items()})
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad coefficient entry: {exc}") from None


@dataclass(frozen=True)
class HFTable:
    """Hilbert function values ``H(0..t_max)`` of an ideal in ``h`` variables."""

    h: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.h < 1:
            raise InputError("HFTable needs h >= 1")
        if any(v < 0 for v in self.values):
            raise InputError("Hilbert function values must be nonnegative")

    @property
    def t_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, t: int) -> int:
        return self.values[t]


def evaluate(c: CoeffVector, N: int, t: int) -> int:
    """``sum_s c_s * bco(N+t+s-1, N-1)``."""
    if N < 1:
        raise InputError(f"evaluate needs N >= 1, got {N}")
    return sum(cs * bco(N + t + s - 1, N - 1) for s, cs in c)


def _monomials_in(nvars: int, deg: int) -> int:
    # bco(nvars+deg-1, deg) miscounts the single degree-0 monomial when nvars == 0
    if nvars == 0:
        return 1 if deg == 0 else 0
    return bco(nvars + deg - 1, deg)


def extend_by_convolution(H: HFTable, N: int, t: int) -> int:
    """Hilbert function in ``N`` variables from the one in ``h`` variables:
    ``sum_{i<=t} H(i) * #(monomials of degree t-i in N-h variables)``."""
    if N < H.h:
        raise InputError(f"extend_by_convolution needs N >= h={H.h}, got {N}")
    if t > H.t_max:
        raise InputError(f"t={t} exceeds the table's t_max={H.t_max}")
    if t < 0:
        return 0
    extra = N - H.h
    return sum(H[i] * _monomials_in(extra, t - i) for i in range(t + 1))


@dataclass(frozen=True)
class StablePolynomial:
    """``G_d(N) = sum coeff * bcp(N + bottom - 1, bottom)`` over ``terms``.

    Each term ``(c_s, d + s)`` keeps the integer binomial basis; no expansion
    into powers of ``N`` is ever formed.
    """

    degree: int
    terms: tuple[tuple[int, int], ...]

    def __call__(self, N: int) -> int:
        return sum(cs * bcp(N + bottom - 1, bottom) for cs, bottom in self.terms)

    @property
    def constant_term(self) -> int:
        return self(0)


def stable_polynomial(c: CoeffVector, d: int) -> StablePolynomial:
    """Fixed-degree polynomial of ``c`` at ``t = d``; shifts below ``-d`` drop out."""
    terms = tuple((cs, d + s) for s, cs in c if s >= -d)
    return StablePolynomial(d, terms)


def stabilization_bound(c: CoeffVector, d: int) -> int:
    """Smallest ``N`` from which ``evaluate(c, N, d)`` equals ``G_d(N)``."""
    if not c.coeffs:
        return 1
    return max(1, 1 - d - c.s_min)


def ci_numerator(degrees: Iterable[int]) -> CoeffVector:
    """Coefficients of ``1 - prod(1 - z**m)`` with ``c_s`` read off at ``z**(-s)``."""
    degrees = list(degrees)
    if not degrees:
        raise InputError("ci_numerator needs at least one degree")
    if any(m < 1 for m in degrees):
        raise InputError("complete-intersection degrees must be >= 1")
    poly = {0: 1}
    for m in degrees:
        nxt = dict(poly)
        for k, v in poly.items():
            nxt[k + m] = nxt.get(k + m, 0) - v
        poly = nxt
    out = {-k: -v for k, v in poly.items() if k != 0}
    out[0] = 1 - poly.get(0, 0)
    return CoeffVector(out)


def from_betti(betti: Mapping[int, Mapping[int, int]]) -> CoeffVector:
    """Alternating sum over a graded resolution of the ideal.

    ``betti[i][j]`` is the number of summands ``R(-j)`` in homological degree
    ``i`` (``i = 0`` holds the generators).  Even positions count positively.
    """
    out: dict[int, int] = {}
    for i, row in betti.items():
        sign = 1 if int(i) % 2 == 0 else -1
        for j, count in row.items():
            s = -int(j)
            out[s] = out.get(s, 0) + sign * int(count)
    return CoeffVector(out)


def fit(samples: Iterable[tuple[int, int, int]], s_min: int, s_max: int) -> CoeffVector:
    """Recover the unique coefficients on ``[s_min, s_max]`` matching ``samples``.

    Each sample ``(N, t, value)`` is one linear equation in the basis
    ``bco(N+t+s-1, N-1)``.  Elimination runs column by column from ``s_max``
    down, which is where the basis is triangular in ``t``.
    """
    if s_min > s_max:
        raise InputError(f"empty shift range [{s_min}, {s_max}]")
    shifts = list(range(s_max, s_min - 1, -1))
    rows = []
    for N, t, value in samples:
        if N < 1:
            raise InputError(f"sample with N={N} < 1")
        rows.append([Fraction(bco(N + t + s - 1, N - 1)) for s in shifts] + [Fraction(value)])
    if not rows:
        raise FitError("no samples given")

    ncols = len(shifts)
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        best = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                best = r
                break
        if best is None:
            continue
        rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
        prow = rows[pivot_row]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col] / prow[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        pivots.append(col)
        pivot_row += 1

    for r in range(pivot_row, len(rows)):
        if rows[r][-1] != 0:
            raise FitError("samples are not realizable by any LCBC function on the given shift range")
    missing = [shifts[col] for col in range(ncols) if col not in pivots]
    if missing:
        raise FitError(f"samples do not determine c_s for s in {sorted(missing)}")

    out = {}
    for r, col in enumerate(pivots):
        val = rows[r][-1] / rows[r][col]
        if val.denominator != 1:
            raise FitError(f"non-integral solution c_{shifts[col]} = {val}")
        out[shifts[col]] = int(val)
    return CoeffVector(out)
