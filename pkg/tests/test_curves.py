import pytest
from hypothesis import given, settings, strategies as st

from richelot.curves import (
    INF,
    BranchDivisor,
    branch_divisor,
    curve_from_ints,
    curve_from_points,
    curve_from_record,
    curve_record,
    genus_of_degree,
    new_curve,
    point_from_record,
    point_key,
)
from richelot.errors import BoundExceeded, DegreeTooSmall, NotSquarefree
from richelot.ff import make_field
from richelot.upoly import Poly


def test_genus_from_degree():
    assert [genus_of_degree(d) for d in range(3, 11)] == [1, 1, 2, 2, 3, 3, 4, 4]


def test_validation():
    with pytest.raises(DegreeTooSmall):
        curve_from_ints(7, [1, 0, 1])
    with pytest.raises(NotSquarefree):
        curve_from_ints(7, [1, -2, 1, 0, 1, -2, 1])     # (x - 1)^2 (x^4 + 1)
    F = make_field(7)
    x = Poly.x(F)
    with pytest.raises(NotSquarefree):
        new_curve(F, (x - 1) ** 2 * (x ** 3 + 2))


def test_branch_divisor_counts_infinity_for_odd_degree():
    C = curve_from_ints(11, [0, -1, 0, 1])                 # y^2 = x^3 - x
    B, F = branch_divisor(C)
    assert B.includes_infinity and len(B) == 4
    assert B.points[-1] is INF
    assert [int(P) for P in B.points[:-1]] == [0, 1, 10]
    assert F.k == 1


def test_branch_divisor_needs_extension():
    C = curve_from_ints(7, [1, 0, 0, 0, 0, 0, 0, 0, 1])   # x^8 + 1 splits over F_{7^2}
    B, F = branch_divisor(C)
    assert F.q == 49 and len(B) == 8
    with pytest.raises(BoundExceeded):
        branch_divisor(curve_from_ints(7, [3, 1, 0, 0, 0, 0, 0, 0, 0, 1]), max_degree=2)


def test_point_key_orders_infinity_last():
    F = make_field(5)
    pts = [INF, F(3), F(0)]
    assert sorted(pts, key=point_key) == [F(0), F(3), INF]


@given(st.sets(st.integers(0, 12), min_size=3, max_size=9), st.booleans(), st.integers(1, 12))
@settings(max_examples=80, deadline=None)
def test_points_to_curve_and_back(rs, with_inf, lead):
    F = make_field(13)
    pts = [F(r) for r in rs] + ([INF] if with_inf else [])
    if len(pts) < 4 or len(pts) % 2:
        return
    C = new_curve(F, curve_from_points(F, pts, lead))
    assert C.f.lc == F(lead)
    B, _ = branch_divisor(C)
    assert B.points == sorted(pts, key=point_key)
    assert len(B) == 2 * C.genus + 2


@given(st.lists(st.integers(0, 6), min_size=6, max_size=9))
@settings(max_examples=60, deadline=None)
def test_record_round_trip(cs):
    F = make_field(7, 2)
    f = Poly(F, [F.from_coeffs([c, (c * 3) % 7]) for c in cs[:-1]] + [F.one])
    try:
        C = new_curve(F, f)
    except (NotSquarefree, DegreeTooSmall):
        return
    rec = curve_record(C)
    assert curve_from_record(rec) == C
    assert rec["modulus"] == list(F.modulus)


def test_record_strictness():
    F = make_field(5, 2)
    with pytest.raises(ValueError):
        point_from_record(F, 3)                 # scalars only allowed over prime fields
    with pytest.raises(ValueError):
        point_from_record(F, [1, 5])
    with pytest.raises(ValueError, match=r"f\[1\]"):
        curve_from_record({"p": 5, "k": 1, "f": [[1], [9], [0], [1]]})
    with pytest.raises(ValueError, match="missing"):
        curve_from_record({"p": 5})
    assert point_from_record(F, "inf") is INF


def test_from_points_helper():
    F = make_field(5)
    D = BranchDivisor.from_points([INF, F(1), F(0), F(4)])
    assert D.includes_infinity and [int(a) for a in D.finite_points] == [0, 1, 4]
