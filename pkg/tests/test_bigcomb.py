from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from lexstab.bigcomb import bco, bcp, macaulay_growth, macaulay_rep
from lexstab.errors import InputError

from ideals import monomials


def bcp_oracle(n, r):
    acc = Fraction(1)
    for j in range(r):
        acc *= Fraction(n - j, j + 1)
    assert acc.denominator == 1
    return int(acc)


def growth_by_enumeration(m, d, N):
    """Quotient size in degree d+1 after keeping the lex-smallest m monomials of
    degree d outside the ideal (the ideal is the lex-upper rest)."""
    deg_d = sorted(monomials(N, d), reverse=True)  # lex-descending
    ideal = deg_d[: len(deg_d) - m]
    multiples = set()
    for g in ideal:
        for i in range(N):
            multiples.add(g[:i] + (g[i] + 1,) + g[i + 1:])
    return sum(1 for _ in monomials(N, d + 1)) - len(multiples)


@pytest.mark.parametrize("n, r, expected", [(5, 2, 10), (-1, 3, 0), (3, 5, 0), (0, 0, 1), (4, -1, 0)])
def test_bco_examples(n, r, expected):
    assert bco(n, r) == expected


@pytest.mark.parametrize("n, r, expected", [(-2, 2, 3), (2, 4, 0), (-3, 3, -10), (7, 0, 1), (-7, 0, 1)])
def test_bcp_examples(n, r, expected):
    assert bcp(n, r) == expected
    assert bcp_oracle(n, r) == expected


def test_bcp_rejects_negative_r():
    with pytest.raises(InputError):
        bcp(3, -1)


def test_bcp_agrees_with_bco_for_nonnegative_arguments():
    for n in range(61):
        for r in range(61):
            assert bcp(n, r) == bco(n, r)


def test_bcp_matches_product_oracle_on_grid():
    for n in range(-50, 51):
        for r in range(0, 21):
            assert bcp(n, r) == bcp_oracle(n, r)


def test_pascal_extension():
    for n in range(-50, 51):
        for r in range(1, 21):
            assert bcp(n, r) == bcp(n - 1, r) + bcp(n - 1, r - 1)


def test_reflection():
    for n in range(1, 51):
        for r in range(0, 21):
            assert bcp(-n, r) == (-1) ** r * bco(n + r - 1, r)


def test_ordinary_identities():
    for n in range(1, 51):
        for r in range(1, 21):
            assert bco(n, r) == bco(n - 1, r) + bco(n - 1, r - 1)
            assert bco(n, r) - bco(n - 1, r - 1) == bco(n - 1, r)


def test_second_identity_needs_lower_top():
    # the variant with bco(n, r-1) on the right fails already at (5, 2)
    assert bco(5, 2) - bco(4, 1) == 6
    assert bco(5, 1) == 5


def test_huge_arguments_small_bottom():
    n = 10**85 + 7
    assert bcp(n, 3) == n * (n - 1) * (n - 2) // 6
    assert bco(n, 14) == bcp_oracle(n, 14)


@pytest.mark.parametrize("m, d, terms", [(13, 2, ((5, 2), (3, 1))), (0, 3, ()), (4, 2, ((3, 2), (1, 1)))])
def test_macaulay_rep_examples(m, d, terms):
    rep = macaulay_rep(m, d)
    assert rep.terms == terms
    assert rep.value == m
    assert rep.is_valid()


@pytest.mark.parametrize("m, d", [(-1, 2), (3, 0)])
def test_macaulay_rep_contract(m, d):
    with pytest.raises(InputError):
        macaulay_rep(m, d)


def test_macaulay_growth_examples():
    assert macaulay_growth(13, 2) == 26
    assert growth_by_enumeration(13, 2, 5) == 26
    assert macaulay_growth(4, 2) == 5
    assert growth_by_enumeration(4, 2, 3) == 5
    for d in range(1, 6):
        assert macaulay_growth(0, d) == 0


def test_macaulay_growth_matches_lex_segments():
    for N in (2, 3, 4):
        for d in (1, 2, 3):
            total = bco(N + d - 1, d)
            for m in range(total + 1):
                assert macaulay_growth(m, d) == growth_by_enumeration(m, d, N), (N, d, m)


def test_macaulay_growth_never_shrinks():
    for d in range(1, 8):
        for m in range(0, 400):
            assert macaulay_growth(m, d) >= m


@given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=30))
def test_macaulay_rep_round_trip(m, d):
    rep = macaulay_rep(m, d)
    assert rep.is_valid()
    assert rep.value == m


@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=0, max_value=12))
def test_bcp_property_vs_oracle(n, r):
    assert bcp(n, r) == bcp_oracle(n, r)
    assert bcp(n, r) * factorial(r) == _falling(n, r)


def _falling(n, r):
    out = 1
    for j in range(r):
        out *= n - j
    return out
