"""Universal lex ideals described by their generator-degree data.

A :class:`GammaSpec` lists pairs ``(d_j, alpha_j)``: ``alpha_j`` minimal
generators in degree ``d_j``.  That alone pins down the generators, and for
``N > beta_h`` the Hilbert function has a closed form in binomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bigcomb import bco, bcp
from .errors import InputError
from .monomial import Monomial

__all__ = [
    "GammaSpec",
    "generators_from_gamma",
    "hf_gamma",
    "hf_from_b",
    "hf_from_b_polynomial",
    "gamma_from_b",
]


@dataclass(frozen=True)
class GammaSpec:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(d), int(a)) for d, a in self.pairs)
        for d, a in pairs:
            if d < 1 or a < 1:
                raise InputError(f"Gamma pairs need degree >= 1 and count >= 1, got {(d, a)}")
        degs = [d for d, _ in pairs]
        if any(x >= y for x, y in zip(degs, degs[1:])):
            raise InputError("Gamma degrees must be strictly increasing")
        object.__setattr__(self, "pairs", pairs)

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.pairs]

    @property
    def betas(self) -> list[int]:
        """``[beta_0, beta_1, ..., beta_h]`` with ``beta_0 = 0``."""
        out = [0]
        for _, a in self.pairs:
            out.append(out[-1] + a)
        return out

    @property
    def total(self) -> int:
        return self.betas[-1]

    def to_json(self) -> dict:
        return {"gamma": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, obj) -> "GammaSpec":
        raw = obj["gamma"] if isinstance(obj, dict) else obj
        try:
            return cls(tuple((int(d), int(a)) for d, a in raw))
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad gamma spec: {exc}") from None


def generators_from_gamma(g: GammaSpec) -> list[Monomial]:
    """Minimal generators in canonical order (by degree, then lex-descending).

    ``mu_1 = x1^(d_1 - 1)`` and ``mu_{j+1} = mu_j * x_{beta_j + 1}^(d_{j+1} - d_j)``;
    degree ``d_j`` contributes ``mu_j * x_k`` for ``beta_{j-1} < k <= beta_j``.
    """
    if not g.pairs:
        return []
    betas = g.betas
    n = betas[-1]
    mu = [0] * n
    mu[0] = g.pairs[0][0] - 1
    out = []
    for j, (d, alpha) in enumerate(g.pairs):
        if j > 0:
            mu[betas[j]] += d - g.pairs[j - 1][0]
        for k in range(betas[j], betas[j + 1]):
            exps = list(mu)
            exps[k] += 1
            out.append(Monomial(tuple(exps)))
    return out


def hf_gamma(g: GammaSpec, N: int, t: int) -> int:
    """Hilbert function of the universal lex ideal of ``g`` in ``N > beta_h`` variables."""
    betas = g.betas
    if N <= betas[-1]:
        raise InputError(f"hf_gamma needs N > beta_h = {betas[-1]}, got N={N}")
    total = 0
    for j, (d, _) in enumerate(g.pairs, start=1):
        M0, M1 = N - betas[j - 1], N - betas[j]
        total += bco(M0 + t - d, M0 - 1) - bco(M1 + t - d, M1 - 1)
    return total


def _check_b(b: Sequence[int]) -> list[int]:
    b = [int(x) for x in b]
    if any(x < 0 for x in b):
        raise InputError("b must be nonnegative")
    if any(x > y for x, y in zip([0] + b, b)):
        raise InputError("b must be nondecreasing")
    return b


def hf_from_b(b: Sequence[int], N: int, t: int) -> int:
    """Hilbert function from cumulative counts ``b_1..b_d`` (``b_0 = 0``), ``N > b_d``."""
    b = _check_b(b)
    full = [0] + b
    if b and N <= full[-1]:
        raise InputError(f"hf_from_b needs N > b_d = {full[-1]}, got N={N}")
    total = 0
    for j in range(1, len(full)):
        M0, M1 = N - full[j - 1], N - full[j]
        total += bco(M0 + t - j, M0 - 1) - bco(M1 + t - j, M1 - 1)
    return total


def hf_from_b_polynomial(b: Sequence[int], N: int, t: int) -> int:
    """Polynomial-in-``N`` form of :func:`hf_from_b`, valid at any integer ``N``.

    Binomials are written with bottom ``t - j + 1`` and evaluated as ``bcp``,
    so ``N = 0`` gives the constant term.  Terms with ``t < j`` are dropped.
    """
    full = [0] + _check_b(b)
    total = 0
    for j in range(1, len(full)):
        r = t - j + 1
        if r < 1:
            continue
        total += bcp(N - full[j - 1] + t - j, r) - bcp(N - full[j] + t - j, r)
    return total


def gamma_from_b(b: Sequence[int]) -> GammaSpec:
    """Inverse bookkeeping: keep ``(j, b_j - b_{j-1})`` wherever the count jumps."""
    full = [0] + _check_b(b)
    return GammaSpec(tuple((j, full[j] - full[j - 1]) for j in range(1, len(full)) if full[j] > full[j - 1]))
