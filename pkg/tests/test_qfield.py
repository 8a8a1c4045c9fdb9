"""Field arithmetic, units, and norm-class enumeration against brute force."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sollink import (
    InputError,
    brute_force_norm_solutions,
    enumerate_norm_classes,
    is_squarefree,
    make_field,
    reduce_totally_positive,
)
from conftest import field
from oracles import pell_units

# (d, eps0 coords, eps0 norm, eps coords) on the (1, w) basis
KNOWN_UNITS = [
    (2, (1, 1), -1, (3, 2)),
    (3, (2, 1), 1, (2, 1)),
    (5, (0, 1), -1, (1, 1)),
    (6, (5, 2), 1, (5, 2)),
    (13, (1, 1), -1, (4, 3)),
    (17, (3, 2), -1, (25, 16)),
    (21, (2, 1), 1, (2, 1)),
]


@pytest.mark.parametrize("d,eps0,norm,eps", KNOWN_UNITS)
def test_known_fundamental_units(d, eps0, norm, eps):
    f = field(d)
    assert (f.eps0.a, f.eps0.b) == eps0
    assert f.eps0_norm == norm
    assert (f.eps.a, f.eps.b) == eps


@pytest.mark.parametrize("d", [2, 3, 5, 6, 13, 17, 21, 94])
def test_units_match_pell_oracle(d):
    f = field(d)
    (a0, b0, n0), (a1, b1) = pell_units(d)
    assert (f.eps0.a, f.eps0.b, f.eps0_norm) == (a0, b0, n0)
    assert (f.eps.a, f.eps.b) == (a1, b1)


def test_unit_basic_properties(field5):
    assert abs(field5.eps0.norm()) == 1
    assert field5.eps.norm() == 1
    assert field5.eps.is_totally_positive()
    assert not field5.eps0.is_totally_positive()  # norm -1 for d=5
    assert field5.eps > 1


@pytest.mark.parametrize("bad", [1, 4, 12, 18, 0, -5])
def test_make_field_rejects_bad_d(bad):
    with pytest.raises(InputError):
        make_field(bad)


def test_is_squarefree():
    assert [d for d in range(2, 20) if is_squarefree(d)] == [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]


def test_arithmetic_identities(field5):
    w = field5.omega
    assert w * w == -field5.n0 + field5.s0 * w
    assert (field5.sqrt_disc * field5.sqrt_disc).a == field5.disc
    x = field5.element(3, Fraction(1, 2))
    assert x * x.conj() == x.norm()
    assert x + x.conj() == x.trace()
    assert (x**3) * (x**-3) == field5.one
    assert (1 / w) * w == field5.one


def test_sign_is_exact():
    f = field(5)
    # 682/305 is a continued-fraction convergent of sqrt(5); the difference is
    # ~1e-5 and must still get the exact sign right
    x = f.sqrt_disc * 305 - 682
    assert x.sign() == (1 if 5 * 305**2 > 682**2 else -1)
    assert (-x).sign() == -x.sign()
    assert f.element(0).sign() == 0


def test_norm_classes_d5():
    f = field(5)
    assert [(c.rep.a, c.rep.b) for c in enumerate_norm_classes(f, 1)] == [(1, 0)]
    assert enumerate_norm_classes(f, 2) == []
    assert enumerate_norm_classes(f, 3) == []
    assert [(c.rep.a, c.rep.b) for c in enumerate_norm_classes(f, 4)] == [(2, 0)]
    assert [(c.rep.a, c.rep.b) for c in enumerate_norm_classes(f, 5)] == [(2, 1)]
    assert enumerate_norm_classes(f, Fraction(1, 2)) == []
    with pytest.raises(InputError):
        enumerate_norm_classes(f, 0)
    with pytest.raises(InputError):
        enumerate_norm_classes(f, -3)


def test_brute_force_box_d5(field5):
    ones = brute_force_norm_solutions(field5, 1, 20)
    coords = {(x.a, x.b) for x in ones}
    assert (1, 0) in coords  # 1
    assert (1, 1) in coords  # eps
    assert (2, 3) in coords or (3, 2) in coords  # eps^2 = 2 + 3w
    fours = {(x.a, x.b) for x in brute_force_norm_solutions(field5, 4, 20)}
    assert (2, 0) in fours and (2, 2) in fours  # 2 and 2*eps


def test_reduction_lands_in_domain(field5):
    eps = field5.eps
    x = field5.element(2, 1) * eps**5
    r = reduce_totally_positive(field5, x)
    assert (r.a, r.b) == (2, 1)
    assert reduce_totally_positive(field5, r) == r
    with pytest.raises(InputError):
        reduce_totally_positive(field5, field5.element(-1))


@pytest.mark.parametrize("d", [5, 13])
def test_enumeration_matches_brute_force(d):
    # acceptance covers six fields; keep a quick version at module level
    f = field(d)
    eps_f = f.eps.embed()
    for n in range(1, 21):
        bound = int(n**0.5 * (eps_f + 1)) + 2
        brute = brute_force_norm_solutions(f, n, bound)
        reduced = {(r.a, r.b) for r in (reduce_totally_positive(f, x) for x in brute)}
        listed = {(c.rep.a, c.rep.b) for c in enumerate_norm_classes(f, n)}
        assert reduced == listed, f"d={d} n={n}"


small_fields = st.sampled_from([2, 3, 5, 13, 17])
coords = st.integers(min_value=-8, max_value=8)


@given(small_fields, coords, coords, coords, coords)
@settings(max_examples=80, deadline=None)
def test_norm_is_multiplicative(d, a1, b1, a2, b2):
    f = field(d)
    x, y = f.element(a1, b1), f.element(a2, b2)
    assert (x * y).norm() == x.norm() * y.norm()


@given(small_fields, coords, coords, coords, coords)
@settings(max_examples=80, deadline=None)
def test_conjugation_is_a_ring_map(d, a1, b1, a2, b2):
    f = field(d)
    x, y = f.element(a1, b1), f.element(a2, b2)
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.conj().conj() == x


@given(small_fields, coords, coords)
@settings(max_examples=80, deadline=None)
def test_sign_agrees_with_float_embedding(d, a, b):
    f = field(d)
    x = f.element(a, b)
    emb = x.embed()
    if abs(emb) > 1e-6:
        assert x.sign() == (1 if emb > 0 else -1)


@given(small_fields, coords, coords, st.integers(min_value=-4, max_value=4))
@settings(max_examples=80, deadline=None)
def test_reduction_is_orbit_invariant(d, a, b, k):
    f = field(d)
    x = f.element(a, b)
    if not x.is_totally_positive():
        return
    assert reduce_totally_positive(f, x * f.eps**k) == reduce_totally_positive(f, x)


def test_cross_field_operations_rejected():
    with pytest.raises(InputError):
        field(5).one + field(13).one
