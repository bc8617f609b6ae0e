import pytest
from hypothesis import given, settings, strategies as st

from richelot.cartier import (
    POWER_BUDGET,
    cartier_matrix,
    congruence_scan,
    factors_superspecial,
    is_superspecial,
    is_supersingular_elliptic,
    odd_primes,
    scan_csv,
)
from richelot.curves import curve_from_ints
from richelot.errors import BudgetExceeded, WrongGenus

from oracles import cartier_entries, count_points_affine_plus_infinity


@given(st.sampled_from([5, 7, 11, 13, 17, 23, 29]), st.lists(st.integers(-9, 9), min_size=5, max_size=8))
@settings(max_examples=80, deadline=None)
def test_matrix_matches_naive_power(p, cs):
    cs = cs[:-1] + [1]
    try:
        C = curve_from_ints(p, cs)
    except ValueError:
        return
    M = cartier_matrix(C)
    assert [[int(e) for e in row] for row in M.entries] == cartier_entries(cs, p, C.genus)


@pytest.mark.parametrize("p", odd_primes(5, 60))
def test_hasse_invariant_agrees_with_point_count(p):
    """E supersingular iff #E(F_p) = 1 mod p (for p >= 5, iff a_p = 0)."""
    for cs in ([0, -1, 0, 1], [1, 0, 0, 1], [2, 3, 0, 1]):
        try:
            C = curve_from_ints(p, cs)
        except ValueError:
            continue
        n = count_points_affine_plus_infinity(cs, p)
        assert is_supersingular_elliptic(C) == (n % p == 1)


def test_wrong_genus_and_budget():
    with pytest.raises(WrongGenus):
        is_supersingular_elliptic(curve_from_ints(7, [1, 0, 0, 0, 0, 1]))
    with pytest.raises(BudgetExceeded):
        cartier_matrix(curve_from_ints(1009, [1, 0, 0, 0, 0, 1]), budget=100)
    assert POWER_BUDGET >= 14 * 4095


def test_scan_records_errors_per_prime():
    rows = congruence_scan([1, 0, 0, 0, 0, 1], [3, 5, 7, 11])
    by_p = {r.p: r for r in rows}
    assert by_p[5].superspecial is None and "NotSquarefree" in by_p[5].error   # x^5 + 1 = (x + 1)^5
    assert by_p[11].superspecial is False
    text = scan_csv(rows)
    assert text.splitlines()[0] == "p,p_mod_4,p_mod_8,p_mod_5,is_superspecial"
    assert "11,3,3,1,false" in text


def test_scan_accepts_callable_family():
    rows = congruence_scan(lambda p: curve_from_ints(p, [0, -1, 0, 1]), odd_primes(3, 40))
    assert [r.p for r in rows if r.superspecial] == [3, 7, 11, 19, 23, 31]


def test_factors_superspecial():
    E1, E2 = curve_from_ints(7, [1, 0, 0, 0, 1]), curve_from_ints(7, [-1, 0, 0, 0, 1])
    assert factors_superspecial([E1, E2])
    assert not factors_superspecial([curve_from_ints(13, [1, 0, 0, 0, 1])])


def test_large_prime_within_budget_is_fast():
    import time
    t = time.perf_counter()
    is_superspecial(curve_from_ints(8191, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]))
    assert time.perf_counter() - t < 10
