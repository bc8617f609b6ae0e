import random

import pytest
from hypothesis import given, settings, strategies as st

from richelot.errors import BoundExceeded, DivisionByZero, FieldTooLarge, ZeroPolynomial
from richelot.ff import make_field
from richelot.upoly import Poly, count_roots, is_squarefree, roots_in_field, splitting_context

from oracles import naive_power_coeffs

F7 = make_field(7)


@st.composite
def polys(draw, p=7, max_deg=8):
    F = make_field(p)
    cs = draw(st.lists(st.integers(0, p - 1), min_size=0, max_size=max_deg + 1))
    return Poly(F, cs)


def test_normalization_and_degree():
    f = Poly(F7, [1, 2, 0, 0])
    assert f.degree == 1 and len(f) == 2
    assert Poly(F7, []).degree == -1
    assert Poly(F7, [0]) == Poly(F7, [])
    with pytest.raises(ZeroPolynomial):
        Poly(F7, []).lc


@given(polys(), polys(), polys())
@settings(max_examples=120, deadline=None)
def test_ring_laws(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f) == Poly(F7, [])


@given(polys(), polys())
@settings(max_examples=120, deadline=None)
def test_division_identity(f, g):
    if not g:
        with pytest.raises(DivisionByZero):
            divmod(f, g)
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(polys(), polys())
@settings(max_examples=120, deadline=None)
def test_gcd_divides_both(f, g):
    if not f and not g:
        return
    d = f.gcd(g)
    assert d.lc == F7.one
    assert not f % d and not g % d


def test_kronecker_product_matches_schoolbook():
    rng = random.Random(1)
    p = 8191
    F = make_field(p)
    a = [rng.randrange(p) for _ in range(60)]
    b = [rng.randrange(p) for _ in range(45)]
    got = (Poly(F, a) * Poly(F, b)).int_coeffs()
    want = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            want[i + j] = (want[i + j] + x * y) % p
    assert got == want


@pytest.mark.parametrize("p, e", [(7, 3), (101, 50), (1009, 30)])
def test_power_matches_naive(p, e):
    f = [1, 0, 3, 0, 0, 1, 2]
    F = make_field(p)
    assert (Poly(F, f) ** e).int_coeffs() == naive_power_coeffs(f, e, p)


def test_powmod_and_derivative():
    x = Poly.x(F7)
    m = Poly(F7, [3, 0, 1, 1])
    assert x.powmod(7 ** 3, m) == (x ** (7 ** 3)) % m
    assert Poly(F7, [1, 2, 3, 4]).derivative() == Poly(F7, [2, 6, 12])


def test_evaluation_and_from_roots():
    F = make_field(5, 2)
    rs = [F.gen, F(2), F.gen + 1]
    f = Poly.from_roots(F, rs, lead=3)
    assert f.lc == F(3)
    assert all(not f(r) for r in rs)
    assert roots_in_field(f) == sorted(rs, key=lambda a: a.c)


def test_squarefree():
    x = Poly.x(F7)
    assert is_squarefree(x ** 3 - 1)
    assert not is_squarefree((x - 1) ** 2 * (x + 2))
    with pytest.raises(ZeroPolynomial):
        is_squarefree(Poly(F7, []))


@given(st.sets(st.integers(0, 10), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_roots_of_product_of_linears(rs):
    F = make_field(11)
    f = Poly.from_roots(F, [F(r) for r in rs])
    assert [int(r) for r in roots_in_field(f)] == sorted(rs)


def test_roots_over_extension():
    # x^2 + 1 has no roots in F_7 and two in F_49
    f = Poly(F7, [1, 0, 1])
    assert roots_in_field(f) == []
    assert len(roots_in_field(f, make_field(7, 2))) == 2
    with pytest.raises(FieldTooLarge):
        roots_in_field(f, make_field(7, 8), bound=1000)


def test_splitting_context():
    x = Poly.x(F7)
    assert splitting_context(x ** 8 - 1).k == 2             # order-8 roots of unity need F_49
    assert splitting_context(x ** 3 - 2).k == 3 or splitting_context(x ** 3 - 2).k == 1
    assert count_roots(x ** 8 - 1, 1) == 2                  # only +-1 in F_7
    with pytest.raises(BoundExceeded):
        splitting_context(Poly(F7, [3, 1, 0, 0, 0, 0, 0, 0, 0, 1]), max_degree=2)


def test_descend_and_format():
    F = make_field(7, 2)
    f = Poly(F, [6, 0, 1]).descend()
    assert f.ctx.k == 1
    assert f.format() == "x^2 - 1"
    assert Poly(F, [F.gen]).descend().ctx.k == 2
