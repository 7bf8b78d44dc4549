import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffcurves import unipoly as U
from ffcurves.bipoly import BiPoly, HomForm, resultant
from ffcurves.field import make_field
from ffcurves.parse import parse_poly

import oracles as O


def bipolys(F, max_deg=3):
    mono = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    return st.dictionaries(mono, st.integers(1, F.q - 1), min_size=1, max_size=6).map(
        lambda t: BiPoly(F, t)
    )


def test_specialize_linear_by_substitution():
    F = make_field(5)
    f = parse_poly("X^2 - T^3 - T - 1", "bi", F)
    S = O.SlowField(5, 1)
    for a1, a2 in itertools.product(range(5), repeat=2):
        got = list(f.specialize_linear(a1, a2).coeffs)
        for t in range(5):
            x = (a1 * t + a2) % 5
            assert U.evaluate(F, got, t) == f.evaluate((t, x)) == O.eval_form(S, {(0, i, j): c for (i, j), c in f.terms.items()}, (1, t, x))


def test_homogenize_roundtrip_and_variable_convention():
    F = make_field(7)
    f = parse_poly("X^2 - T^3 - T^2", "bi", F)
    G = f.homogenize()
    assert G.degree == 3
    assert G == parse_poly("X0*X2^2 - X1^3 - X0*X1^2", "hom", F)
    assert G.dehomogenize() == f


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_partials_obey_euler(data):
    F = make_field(7)
    f = data.draw(bipolys(F))
    G = f.homogenize()
    d = F.from_int(G.degree)
    euler = sum(
        (HomForm(F, {tuple(int(i == v) for i in range(3)): 1}) * G.diff(v) for v in range(3)),
        HomForm(F, {}, G.degree),
    )
    assert euler == G.scale(d)


def test_resultant_detects_common_factor():
    F = make_field(5)
    f = parse_poly("X^2 - T", "bi", F)
    g = parse_poly("X - T", "bi", F)
    r = resultant(f, g, "X")  # +-f(T, T) = +-(T^2 - T)
    assert U.monic(F, list(r.coeffs)) == [0, 4, 1]
    h = parse_poly("X^2 - T", "bi", F) * parse_poly("X + 1", "bi", F)
    assert not resultant(h, parse_poly("X + 1", "bi", F), "X")


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_resultant_vanishes_at_common_roots(data):
    F = make_field(5)
    f, g = data.draw(bipolys(F)), data.draw(bipolys(F))
    if f.deg_X() < 1 and g.deg_X() < 1:
        return
    r = list(resultant(f, g, "X").coeffs)
    for t in range(5):
        fa = U.strip([U.evaluate(F, c, t) for c in f.columns()])
        ga = U.strip([U.evaluate(F, c, t) for c in g.columns()])
        if len(fa) == f.deg_X() + 1 and len(ga) == g.deg_X() + 1 and len(U.gcd(F, fa, ga)) > 1:
            assert U.evaluate(F, r, t) == 0


def test_resultant_errors():
    F = make_field(3)
    with pytest.raises(ValueError):
        resultant(parse_poly("T", "bi", F), parse_poly("T + 1", "bi", F), "X")
    with pytest.raises(ValueError):
        resultant(parse_poly("X", "bi", F), BiPoly(F, {}), "X")


def test_hessian_of_conic_is_constant():
    F = make_field(7)
    G = parse_poly("X1^2 - X0*X2", "hom", F)
    H = G.hessian()
    # det [[0, 0, -1], [0, 2, 0], [-1, 0, 0]] = -2
    assert H.degree == 0 and H.terms == {(0, 0, 0): F.from_int(-2)}
