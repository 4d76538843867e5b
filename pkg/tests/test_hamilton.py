from decimal import Decimal

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from lexstab.bigcomb import bco
from lexstab.errors import InputError, PrecisionError
from lexstab.hamilton import (
    check_bounds,
    ell,
    ell_alt_a,
    ell_alt_b,
    hamilton_alt_c,
    log2_fixed,
    lucas_array,
    rho_estimate,
)

TABLE = {
    0: (3, None),
    1: (4, 2),
    2: (6, 3),
    3: (12, 5),
    4: (48, 11),
    5: (924, 47),
    6: (409620, 923),
    7: (83763206256, 409619),
    8: (3508125906290858798172, 83763206255),
    9: (6153473687096578758448522809275077520433168, 3508125906290858798171),
}
ELL_10 = int("189326192088949818333335820590333293708012662495359"
             "02023330546944758507753065602135844")
RHO_43 = "0.2756687129668628532825852274380553674012976"


@pytest.fixture(scope="module")
def table():
    return ell(13)


def test_table_values(table):
    assert table.ell[:6] == (3, 4, 6, 12, 48, 924)
    for n, (l, h) in TABLE.items():
        assert table.ell[n] == l
        if h is not None:
            assert table.H(n) == h
    assert table.H(0) == 1
    assert table.ell[10] == ELL_10
    assert len(str(ELL_10)) == 86


def test_rows_leave_first_H_blank(table):
    rows = ell(3).rows()
    assert rows[0] == (0, 3, None)
    assert rows[3] == (3, 12, 5)


def test_table_contract():
    with pytest.raises(InputError):
        ell(-1)
    with pytest.raises(InputError):
        ell(3).H(5)


@pytest.mark.parametrize("n, value", [(1, 6), (3, 48), (5, 409620)])
def test_alt_a_examples(table, n, value):
    assert ell_alt_a(n, table) == value


def test_alt_examples(table):
    assert ell_alt_b(2, table) == 6
    assert hamilton_alt_c(1, table) == 3
    assert hamilton_alt_c(5, table) == 923


def test_three_way_agreement(table):
    for n in range(0, 13):
        if n >= 2:
            assert ell_alt_a(n - 1, table) == table.ell[n]
        assert ell_alt_b(n, table) == table.ell[n]
    for n in range(1, 13):
        assert hamilton_alt_c(n - 1, table) == table.H(n)


def test_alt_a_needs_n_at_least_one(table):
    with pytest.raises(InputError):
        ell_alt_a(0, table)


def test_bounds(table):
    rep = check_bounds(ell(11))
    assert rep.ok, rep.first_violation
    assert rep.checked > 0
    # spot checks at n = 0 from first principles
    assert 3 * 4 >= 9 and 2 * 4 <= 9
    assert table.ell[1] == 4 == 2 * 2 ** (2 ** 0)


def test_bounds_report_catches_a_bad_table():
    from lexstab.hamilton import HamiltonTable

    bad = HamiltonTable(3, (3, 4, 6, 40))
    rep = check_bounds(bad)
    assert not rep.ok
    assert "(a)" in rep.first_violation


def test_binomial_comparison_lemma():
    for L in range(3, 40):
        for M in range(L + 1, 120):
            if 3 * M < L * L:
                continue
            for k in range(2, L):
                assert bco(M, k) >= bco(L, k + 1), (M, L, k)


def test_ratio_limit_brackets(table):
    gaps = []
    with mpmath.workdps(800):
        for n in range(1, 13):
            num = table.ell[n + 1]
            sq = table.ell[n] ** 2
            assert 2 * num <= sq <= 3 * num
            # 2 * ell_{n+1} / ell_n^2 approaches 1 from below
            gaps.append(mpmath.mpf(1) / 2 - mpmath.mpf(num) / sq)
        assert all(g > 0 for g in gaps)
        assert all(b < a for a, b in zip(gaps[2:], gaps[3:]))
        assert gaps[-1] < mpmath.mpf(10) ** -100


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=10**60), st.integers(min_value=1, max_value=200))
def test_log2_fixed_vs_mpmath(x, bits):
    got = log2_fixed(x, bits)
    with mpmath.workdps(120):
        want = mpmath.floor(mpmath.log(x, 2) * mpmath.mpf(2) ** bits)
    assert abs(got - int(want)) <= 1


def test_log2_fixed_exact_powers():
    for k in range(0, 200, 7):
        assert log2_fixed(1 << k, 50) == k << 50


def test_rho_digits(table):
    est = rho_estimate(9, table, 43)
    assert str(est.rho_n) == RHO_43


def test_rho_against_mpmath(table):
    with mpmath.workdps(80):
        ref = (mpmath.log(table.ell[10], 2) - 1) / 2 ** 10
        ref_str = mpmath.nstr(ref, 60, strip_zeros=False)
    assert ref_str.startswith(RHO_43)
    # the two digits after the reference ones leave room for the error
    assert ref_str[len(RHO_43):len(RHO_43) + 2] == "33"
    more = rho_estimate(9, table, 50)
    assert str(more.rho_n).startswith(RHO_43 + "33")


def test_rho_error_bounds(table):
    est = rho_estimate(9, table, 43)
    assert est.tight_bound < Decimal("5.19e-45")
    assert est.error_bound > est.tight_bound
    with mpmath.workdps(60):
        stated = 1 / (2 ** 6 * mpmath.log(2) * mpmath.sqrt(table.ell[9]))
        tight = 1 / (2 ** 6 * mpmath.log(2) * mpmath.sqrt(table.ell[10]))
        assert abs(mpmath.mpf(str(est.error_bound)) / stated - 1) < mpmath.mpf(10) ** -30
        assert abs(mpmath.mpf(str(est.tight_bound)) / tight - 1) < mpmath.mpf(10) ** -30


def test_rho_monotone(table):
    values = [rho_estimate(n, table, 60).rho_n for n in range(5, 10)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_rho_trapped(table):
    ests = {n: rho_estimate(n, table, 60) for n in range(4, 13)}
    for n in range(4, 12):
        for m in range(n + 1, 13):
            assert ests[n].rho_n - ests[n].error_bound <= ests[m].rho_n <= ests[n].rho_n
            assert ests[n].rho_n - ests[n].tight_bound <= ests[m].rho_n


def test_asymptotic_sanity(table):
    # ell_n = 2 * 2^(rho_{n-1} * 2^n), so the ratio is governed by the bound at n-1
    with mpmath.workdps(120):
        rho = mpmath.mpf(RHO_43)
        for n in range(5, 10):
            eb = mpmath.mpf(str(rho_estimate(n - 1, table, 60).tight_bound))
            ratio = mpmath.mpf(table.ell[n]) / (2 * mpmath.power(2, rho * 2 ** n))
            assert 1 < ratio < mpmath.power(2, 2 * eb * 2 ** n), n


def test_rho_contract(table):
    with pytest.raises(InputError):
        rho_estimate(3, table, 10)
    with pytest.raises(InputError):
        rho_estimate(13, table, 10)
    with pytest.raises(PrecisionError):
        rho_estimate(9, table, 10, guard_digits=1)


def test_lucas_leaders_and_rows():
    arr = lucas_array(6, 8)
    assert arr.leaders == (1, 1, 2, 6, 36, 876)
    rows = [r.entries for r in arr.rows]
    assert rows[0] == (1, 0, 0, 0, 0, 0, 0, 0)
    assert rows[1] == (1,) * 8
    assert rows[2][:6] == (2, 3, 4, 5, 6, 7)
    assert arr.block(2)[-1].entries[:6] == (1, 5, 9, 14, 20, 27)
    block5 = arr.block(5)
    assert block5[0].entries[:3] == (876, 24570, 401134)
    last4 = arr.block(4)[-1].entries
    assert last4[:3] == (1, 875, 23694)
    assert last4[3] == 376564


def test_lucas_block_sizes_follow_leaders():
    arr = lucas_array(6, 5)
    for n in range(5):
        assert len(arr.block(n)) == arr.leaders[n]
    for n in range(1, 6):
        assert [r.indentation for r in arr.block(n)] == [n] * len(arr.block(n))


def test_lucas_partial_sums_give_hamilton_numbers(table):
    arr = lucas_array(6, 4)
    H = arr.hamilton_numbers()
    assert H == tuple(table.H(n) for n in range(7))
    assert H == (1, 2, 3, 5, 11, 47, 923)


def test_lucas_running_sums():
    arr = lucas_array(5, 7)
    rows = arr.rows
    for prev, cur in zip(rows, rows[1:]):
        shift = cur.indentation - prev.indentation
        if shift == 0:
            assert cur.entries[0] == prev.entries[0] - 1
            for j in range(1, arr.width):
                assert cur.entries[j] == sum(prev.entries[: j + 1])
        else:
            assert shift == 1 and prev.entries[0] == 1
            for j in range(arr.width - 1):
                assert cur.entries[j] == sum(prev.entries[: j + 2])


def test_lucas_contract():
    with pytest.raises(InputError):
        lucas_array(0, 5)
