import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffcurves import gf2
from ffcurves import unipoly as U
from ffcurves.field import make_field
from ffcurves.unipoly import UniPoly

import oracles as O

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (7, 1)]


def polys(F, max_deg=8):
    return st.lists(st.integers(0, F.q - 1), min_size=1, max_size=max_deg + 1)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_divmod_identity(pk, data):
    F = make_field(*pk)
    f = U.strip(data.draw(polys(F)))
    g = U.strip(data.draw(polys(F, 4)))
    if not g:
        return
    q, r = U.divmod_(F, f, g)
    assert U.add(F, U.mul(F, q, g), r) == f
    assert len(r) < len(g)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_gcd_divides_both(pk, data):
    F = make_field(*pk)
    f, g = U.strip(data.draw(polys(F))), U.strip(data.draw(polys(F)))
    h = U.gcd(F, f, g)
    if h:
        assert not U.rem(F, f, h) and not U.rem(F, g, h)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_factor_type_of_products(pk, data):
    F = make_field(*pk)
    f = U.strip(data.draw(polys(F, 4)))
    g = U.strip(data.draw(polys(F, 4)))
    if len(f) < 2 or len(g) < 2:
        return
    both = U.factor_type(F, U.mul(F, f, g))
    assert both == tuple(sorted(U.factor_type(F, f) + U.factor_type(F, g), reverse=True))
    assert sum(both) == len(f) + len(g) - 2


@pytest.mark.parametrize("p,k,n", [(2, 1, 5), (3, 1, 4), (2, 2, 3), (5, 1, 3)])
def test_factor_type_matches_trial_division(p, k, n):
    F, S = make_field(p, k), O.SlowField(p, k)
    for deg in range(1, n + 1):
        for f in U.monic_polys(F, deg):
            assert U.factor_type(F, f) == O.trial_factor_type(S, f)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_irreducible_counts(p, k):
    F = make_field(p, k)
    for n in range(1, 5):
        assert U.count_irreducible(F, n) == O.necklace(F.q, n)


def test_squarefree_decomposition_with_pth_powers():
    F = make_field(3)
    f = U.mul(F, U.powmod(F, [1, 1], 3, [0] * 10 + [1]), [2, 0, 1])  # (T+1)^3 (T^2+2)
    assert U.factor_type(F, f) == (1, 1, 1, 1, 1)
    parts = U.squarefree_decomposition(F, U.mul(F, [1, 1], U.mul(F, [1, 1], [1, 0, 1])))
    assert sorted(m for _, m in parts) == [1, 2]


def test_constants_and_zero():
    F = make_field(5)
    assert not U.is_irreducible(F, [3])
    assert U.is_irreducible(F, [1, 1])
    with pytest.raises(ValueError):
        U.is_irreducible(F, [])
    with pytest.raises(ValueError):
        U.factor_type(F, [2])


def test_unipoly_operators():
    F = make_field(3, 2)
    T = UniPoly.T(F)
    f = T**2 + 1
    assert f.is_irreducible() is False  # x^2 + 1 is the modulus: its root lies in GF(9)
    g = T**2 + T + 2
    assert (f * g) // g == f and not (f * g) % g
    assert f.gcd(g) == UniPoly(F, [1])
    assert str(UniPoly(F, [0, 3])) == "<0,1>*T"


def test_gf2_derivative_and_factoring():
    for a in range(1, 1 << 12):
        expect = sum(1 << (i - 1) for i in range(1, a.bit_length()) if (a >> i) & 1 and i % 2)
        assert gf2.derivative(a) == expect
    S = O.SlowField(2, 1)
    for a in range(2, 1 << 9):
        assert gf2.factor_type(a) == O.trial_factor_type(S, gf2.to_list(a))
