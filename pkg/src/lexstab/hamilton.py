"""Hamilton numbers.

``ell_0 = 3`` and ``ell_{n+1} = 1 + sum_{j=0}^{n} (-1)^j bco(ell_{n-j}, j+2)``;
the Hamilton numbers are ``H_n = ell_{n-1} - 1``.  The sequence grows
doubly exponentially, ``ell_n ~ 2 * 2^(rho * 2^n)``.
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from .bigcomb import bco
from .errors import InputError, PrecisionError

__all__ = [
    "HamiltonTable",
    "ell",
    "ell_alt_a",
    "ell_alt_b",
    "hamilton_alt_c",
    "BoundsReport",
    "check_bounds",
    "log2_fixed",
    "RhoEstimate",
    "rho_estimate",
    "LucasRow",
    "LucasArray",
    "lucas_array",
]

EXTENDED_SEEDS = {-3: 0, -2: 0, -1: 2}
DEFAULT_GUARD_DIGITS = 20


@dataclass(frozen=True)
class HamiltonTable:
    n_max: int
    ell: tuple[int, ...]  # ell_0 .. ell_{n_max}

    def ell_ext(self, i: int) -> int:
        """``ell_i`` including the seeds ``ell_{-3} = ell_{-2} = 0``, ``ell_{-1} = 2``."""
        if i < 0:
            return EXTENDED_SEEDS[i]
        return self.ell[i]

    def H(self, n: int) -> int:
        """``H_n = ell_{n-1} - 1``; ``H_0 = 1`` through the seed ``ell_{-1}``."""
        if not 0 <= n <= self.n_max + 1:
            raise InputError(f"H_{n} not available (table holds H_0..H_{self.n_max + 1})")
        return self.ell_ext(n - 1) - 1

    def rows(self) -> list[tuple[int, int, int | None]]:
        """``(n, ell_n, H_n)``; ``H_0`` is left blank."""
        return [(n, self.ell[n], self.H(n) if n >= 1 else None) for n in range(self.n_max + 1)]


def ell(n_max: int) -> HamiltonTable:
    if n_max < 0:
        raise InputError(f"n_max must be >= 0, got {n_max}")
    seq = [3]
    for n in range(n_max):
        total = 1
        for j in range(n + 1):
            term = bco(seq[n - j], j + 2)
            total += term if j % 2 == 0 else -term
        seq.append(total)
    return HamiltonTable(n_max, tuple(seq))


def _need(table: HamiltonTable, idx: int) -> None:
    if idx > table.n_max:
        raise InputError(f"table only holds ell_0..ell_{table.n_max}, need ell_{idx}")


def ell_alt_a(n: int, table: HamiltonTable) -> int:
    """``ell_{n+1} = sum_{j=1}^{n+1} (-1)^(j+1) bco(ell_{n-j+1} + 1, j+1)`` for n >= 1."""
    if n < 1:
        raise InputError("the alternating form (a) holds for n >= 1")
    _need(table, n)
    total = 0
    for j in range(1, n + 2):
        term = bco(table.ell_ext(n - j + 1) + 1, j + 1)
        total += term if j % 2 == 1 else -term
    return total


def ell_alt_b(n: int, table: HamiltonTable) -> int:
    """``ell_n = 3 + sum_{j=0}^{n-1} (-1)^j bco(ell_{n-j-1} - 1, j+2)``."""
    if n < 0:
        raise InputError("n must be >= 0")
    _need(table, n - 1)
    total = 3
    for j in range(n):
        term = bco(table.ell_ext(n - j - 1) - 1, j + 2)
        total += term if j % 2 == 0 else -term
    return total


def hamilton_alt_c(n: int, table: HamiltonTable) -> int:
    """``H_{n+1} = 2 + sum_{j=0}^{n-1} (-1)^j bco(H_{n-j}, j+2)``."""
    if n < 0:
        raise InputError("n must be >= 0")
    total = 2
    for j in range(n):
        term = bco(table.H(n - j), j + 2)
        total += term if j % 2 == 0 else -term
    return total


@dataclass
class BoundsReport:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> str | None:
        return self.violations[0] if self.violations else None

    def _check(self, cond: bool, label: str) -> None:
        self.checked += 1
        if not cond:
            self.violations.append(label)


def check_bounds(table: HamiltonTable) -> BoundsReport:
    """Exact integer checks of the growth bounds over the whole table.

    (a) ``ell_n^2 / 3 <= ell_{n+1} <= ell_n^2 / 2``;
    (c) the terms ``bco(ell_{n-j}, j+2)`` are nonincreasing in ``j``;
    (e) ``3 * 2^(2^(n-1)) <= ell_{n+1}`` for n >= 1 and ``ell_{n+1} <= 2 * 2^(2^n)``.
    """
    if table.n_max < 2:
        raise InputError("check_bounds needs a table with n_max >= 2")
    rep = BoundsReport()
    L = table.ell
    for n in range(table.n_max):
        sq = L[n] * L[n]
        rep._check(3 * L[n + 1] >= sq, f"(a) lower bound fails at n={n}")
        rep._check(2 * L[n + 1] <= sq, f"(a) upper bound fails at n={n}")
        terms = [bco(L[n - j], j + 2) for j in range(n + 1)]
        for j in range(n):
            rep._check(terms[j] >= terms[j + 1], f"(c) terms increase at n={n}, j={j}")
        if n >= 1:
            rep._check(3 * (1 << (1 << (n - 1))) <= L[n + 1], f"(e) lower bound fails at n={n}")
        rep._check(L[n + 1] <= 2 * (1 << (1 << n)), f"(e) upper bound fails at n={n}")
    return rep


def log2_fixed(x: int, frac_bits: int, guard_bits: int = 64) -> int:
    """``floor(log2(x) * 2^frac_bits)`` up to the last few bits, for an integer x > 0.

    The integer part is the bit length; the fraction comes one bit at a time
    from squaring the mantissa (kept in ``[1, 2)`` as a fixed-point integer
    with ``frac_bits + guard_bits`` bits).
    """
    if x <= 0:
        raise InputError("log2 of a nonpositive integer")
    k = x.bit_length() - 1
    B = frac_bits + guard_bits
    one = 1 << B
    two = one << 1
    M = (x << B) >> k
    bits = 0
    for _ in range(frac_bits):
        M = (M * M) >> B
        bits <<= 1
        if M >= two:
            M >>= 1
            bits |= 1
    return (k << frac_bits) | bits


@dataclass(frozen=True)
class RhoEstimate:
    """Approximation of the growth constant from ``ell_{n+1}``.

    ``error_bound`` uses ``sqrt(ell_n)``; ``tight_bound`` uses
    ``sqrt(ell_{n+1})`` and is far smaller.
    """

    n: int
    digits: int
    rho_n: Decimal
    error_bound: Decimal
    tight_bound: Decimal

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "digits": self.digits,
            "rho_n": str(self.rho_n),
            "error_bound": f"{self.error_bound:.6e}",
            "tight_bound": f"{self.tight_bound:.6e}",
        }


def _bits_for_digits(digits: int) -> int:
    # ceil(digits * log2(10)) with log2(10) < 3.3220
    return (digits * 33220 + 9999) // 10000


def rho_exact_bits(n: int, table: HamiltonTable, frac_bits: int, guard_bits: int = 64) -> Fraction:
    """``(log2(ell_{n+1}) - 1) / 2^(n+1)`` as a fraction with ``frac_bits`` binary places
    of the logarithm."""
    _need(table, n + 1)
    L = log2_fixed(table.ell[n + 1], frac_bits, guard_bits)
    return Fraction(L - (1 << frac_bits), 1 << (frac_bits + n + 1))


def rho_estimate(n: int, table: HamiltonTable, precision_digits: int,
                 guard_digits: int = DEFAULT_GUARD_DIGITS) -> RhoEstimate:
    """``rho_n`` truncated to ``precision_digits`` decimal places, with error bounds.

    The normalisation divides by ``2^(n+1)`` so that ``ell_{n+1} = 2 * 2^(rho_n * 2^(n+1))``,
    matching ``ell_n ~ 2 * 2^(rho * 2^n)``.
    """
    if n < 4:
        raise InputError("the error bound holds for n >= 4")
    if precision_digits < 1:
        raise PrecisionError("precision_digits must be >= 1")
    if guard_digits < 2:
        raise PrecisionError(f"need at least 2 guard digits, got {guard_digits}")
    _need(table, n + 1)
    work = precision_digits + guard_digits
    frac_bits = _bits_for_digits(work) + n + 1
    rho = rho_exact_bits(n, table, frac_bits)

    scaled = rho.numerator * 10**work // rho.denominator
    guard = scaled % 10**guard_digits
    if guard == 0 or guard == 10**guard_digits - 1:
        # truncation at the requested place cannot be trusted
        raise PrecisionError(
            f"digit {precision_digits + 1} onward is ambiguous at {guard_digits} guard digits; "
            "raise the guard digit count"
        )
    head = scaled // 10**guard_digits
    rho_n = Decimal(f"{head}E-{precision_digits}")  # string construction is exact

    ctx = decimal.Context(prec=work + 10)
    ln2 = Decimal(2).ln(ctx)
    scale = Decimal(1 << (n - 3))
    err = ctx.divide(1, ctx.multiply(ctx.multiply(scale, ln2), Decimal(table.ell[n]).sqrt(ctx)))
    tight = ctx.divide(1, ctx.multiply(ctx.multiply(scale, ln2), Decimal(table.ell[n + 1]).sqrt(ctx)))
    return RhoEstimate(n, precision_digits, rho_n, err, tight)


# ---------------------------------------------------------------------------
# Lucas block array
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LucasRow:
    indentation: int
    entries: tuple[int, ...]

    @property
    def first(self) -> int:
        return self.entries[0]


@dataclass(frozen=True)
class LucasArray:
    width: int
    rows: tuple[LucasRow, ...]
    block_starts: tuple[int, ...]  # row index where each block begins
    leaders: tuple[int, ...]  # a_0, a_1, ...

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """``s_0 = 0, s_{n+1} = a_0 + ... + a_n``."""
        out = [0]
        for a in self.leaders:
            out.append(out[-1] + a)
        return tuple(out)

    def hamilton_numbers(self) -> tuple[int, ...]:
        """``H_n = s_n + 1`` for n = 0 .. number of blocks."""
        return tuple(s + 1 for s in self.partial_sums)

    def block(self, n: int) -> tuple[LucasRow, ...]:
        start = self.block_starts[n]
        end = self.block_starts[n + 1] if n + 1 < len(self.block_starts) else len(self.rows)
        return self.rows[start:end]

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "leaders": [str(a) for a in self.leaders],
            "partial_sums": [str(s) for s in self.partial_sums],
            "rows": [
                {"indentation": r.indentation, "entries": [str(e) for e in r.entries]}
                for r in self.rows
            ],
        }


def lucas_array(num_blocks: int, width: int) -> LucasArray:
    """Rows of the block array, ``width`` entries each starting at the row's indentation.

    Row 0 is ``1, 0, 0, ...``.  Each later entry is the running sum of the
    previous row up to its column; the first entry of a row instead drops by
    one while the previous first entry exceeds 1, and once it reaches 1 the
    next row shifts one column right and opens a new block.
    """
    if num_blocks < 1 or width < 2:
        raise InputError("lucas_array needs num_blocks >= 1 and width >= 2")
    ncols = num_blocks - 1 + width
    row = [1] + [0] * (ncols - 1)
    indent = 0
    rows = [LucasRow(0, tuple(row[:width]))]
    block_starts = [0]
    leaders = [1]
    while True:
        first = row[indent]
        new = [0] * ncols
        acc = 0
        for j in range(indent, ncols):
            acc += row[j]
            new[j] = acc
        if first > 1:
            new[indent] = first - 1
        else:
            if len(leaders) == num_blocks:
                break
            new[indent] = 0
            indent += 1
            block_starts.append(len(rows))
            leaders.append(new[indent])
        row = new
        rows.append(LucasRow(indent, tuple(row[indent:indent + width])))
    return LucasArray(width, tuple(rows), tuple(block_starts), tuple(leaders))
