from decimal import Decimal

import pytest

from ffcurves import bateman_horn as BH
from ffcurves.bateman_horn import IntPoly
from ffcurves.primes import primes_up_to

import oracles as O

X = IntPoly([0, 1])
X2 = IntPoly([2, 1])


def test_omega_examples():
    assert all(BH.omega([X], p) == 1 for p in primes_up_to(100))
    assert BH.omega([X, X2], 2) == 1
    assert all(BH.omega([X, X2], p) == 2 for p in primes_up_to(100)[1:])
    f = IntPoly([1, 3])  # 3X + 1
    assert BH.omega([f], 3) == 0 and BH.omega([f], 5) == 1
    assert BH.omega([X, IntPoly([1, 1])], 2) == 2


@pytest.mark.parametrize(
    "coeffs",
    [[1, 0, 1], [1, 1, 1], [-2, 0, 0, 1], [3, 1, 0, 0, 1], [1, 0, 0, 0, 0, 0, 1]],
)
def test_omega_gcd_route_matches_residue_count(coeffs):
    f = IntPoly(coeffs)
    g = IntPoly([5, 0, 1])
    for p in [p for p in primes_up_to(3000) if p > 1900][:15]:
        direct = sum(1 for n in range(p) if f(n) * g(n) % p == 0)
        assert BH._omega_gcd([f, g], p) == direct


def test_omega_bounds():
    fs = [IntPoly([1, 0, 1]), IntPoly([2, 1])]
    for p in primes_up_to(3000):
        assert 0 <= BH.omega(fs, p) <= min(p, 3)


def test_singular_series_special_values():
    assert BH.singular_series([X], 1000).value == 1
    assert BH.singular_series([IntPoly([1, 3])], 1000).value == Decimal(3) / 2
    z = BH.singular_series([X, IntPoly([1, 1])], 50)
    assert z.zero_flag and z.value == 0


def test_twin_series_decreases_after_three():
    a = BH.singular_series([X, X2], 100).value
    b = BH.singular_series([X, X2], 1000).value
    c = BH.singular_series([X, X2], 10000).value
    assert a >= b >= c > Decimal("1.32")


def test_empirical_counts():
    flags = O.sieve_primes(1002)
    assert BH.empirical_count([X], 100) == 25
    assert BH.empirical_count([X, X2], 1000) == sum(1 for n in range(1, 1001) if flags[n] and flags[n + 2])
    assert BH.empirical_count([IntPoly([1, 0, 1])], 10) == 5
    assert BH.empirical_count([X, X2], 5000, "mr") == BH.empirical_count([X, X2], 5000, "sieve")


def test_prediction_forms():
    s = BH.singular_series([X], 100)
    assert float(BH.bh_prediction([X], 10**6, s)) == pytest.approx(72382.4, abs=0.1)
    z = BH.singular_series([X, IntPoly([1, 1])], 50)
    assert BH.bh_prediction([X, IntPoly([1, 1])], 1000, z) == 0
    li = BH.bh_prediction([X], 10**6, s, form="integral")
    assert float(li) == pytest.approx(78626.5, abs=1)  # li(10^6) - li(2)


def test_validation():
    with pytest.raises(ValueError):
        BH.validate([IntPoly([-1, 0, 1])])  # X^2 - 1 = (X - 1)(X + 1)
    with pytest.raises(ValueError):
        BH.validate([IntPoly([1, -1])])  # negative leading coefficient
    with pytest.raises(ValueError):
        BH.validate([X, IntPoly([0, 2])])
    BH.validate([X, X2, IntPoly([1, 0, 1])])


def test_report_json_fields():
    rep = BH.bh_report([X, X2], 10**4, cutoff=1000)
    d = rep.to_dict()
    assert {"s_partial", "cutoff", "zero_flag", "empirical", "prediction", "ratio"} <= set(d)
    assert d["empirical"] == 205
