import pickle

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffcurves.field import embed, embedding, extension, make_field
from ffcurves.primes import divisors, is_prime, mobius, prime_factors, primes_up_to

import oracles as O

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4)]


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (5, 2), (7, 3), (2, 4), (3, 3)])
def test_modulus_is_smallest_irreducible(p, k):
    assert tuple(make_field(p, k).modulus) == O.smallest_modulus(p, k)


def test_frozen_moduli():
    assert tuple(make_field(2, 2).modulus) == (1, 1, 1)
    assert tuple(make_field(3, 2).modulus) == (1, 0, 1)
    assert tuple(make_field(7, 3).modulus) == (1, 0, 1, 1)


def test_same_parameters_same_context():
    assert make_field(3, 2) is make_field(3, 2)
    assert pickle.loads(pickle.dumps(make_field(5, 2))) == make_field(5, 2)


@pytest.mark.parametrize("p,k", [(4, 1), (1, 1), (2, 0), (2, 40)])
def test_bad_parameters(p, k):
    with pytest.raises(ValueError):
        make_field(p, k)


def test_small_examples():
    F5 = make_field(5)
    assert F5.inv(2) == 3
    F4 = make_field(2, 2)
    x = F4.from_vector((0, 1))
    assert F4.vector(F4.mul(x, x)) == (1, 1)
    F9 = make_field(3, 2)
    assert all(F9.pow(a, 9) == a for a in F9.elements())


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_multiplication_matches_vector_oracle(p, k):
    F, S = make_field(p, k), O.SlowField(p, k)
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == S.mul(a, b)
            assert F.add(a, b) == S.add(a, b)


@pytest.mark.parametrize("p,k", SMALL_FIELDS + [(3, 5), (2, 11), (31, 2)])
def test_vectorized_ops_agree(p, k):
    F = make_field(p, k)
    rng = np.random.default_rng(1)
    a = rng.integers(0, F.q, 500)
    b = rng.integers(1, F.q, 500)
    assert F.vmul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vadd(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vneg(a).tolist() == [F.neg(int(x)) for x in a]
    assert F.vinv(b).tolist() == [F.inv(int(y)) for y in b]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (5, 2), (7, 1), (3, 4), (13, 2)]), st.data())
def test_field_axioms(pk, data):
    F = make_field(*pk)
    el = st.integers(0, F.q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b
        assert F.pow(a, F.q - 1) == 1


def test_inverse_of_zero_and_mixed_contexts():
    F = make_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ValueError):
        F.elem(1) + make_field(5).elem(1)


def test_elem_wrapper():
    F = make_field(2, 2)
    x = F.elem((0, 1))
    assert (x * x).coeffs == (1, 1)
    assert x * x.inverse() == F.elem(1)
    assert x**3 == F.elem(1)


def test_enumeration_order():
    F = make_field(3, 2)
    assert [F.vector(a) for a in list(F.elements())[:4]] == [(0, 0), (1, 0), (2, 0), (0, 1)]
    assert len(set(F.elements())) == 9


@pytest.mark.parametrize("src,dst", [((2, 1), (2, 4)), ((2, 2), (2, 4)), ((3, 1), (3, 2)), ((5, 2), (5, 4))])
def test_embedding_is_a_ring_map(src, dst):
    A, B = make_field(*src), make_field(*dst)
    e = embedding(A, B)
    for a in A.elements():
        for b in A.elements():
            assert e(A.mul(a, b)) == B.mul(e(a), e(b))
            assert e(A.add(a, b)) == B.add(e(a), e(b))
        assert e.preimage(e(a)) == a
        assert B.in_subfield(e(a), A.k)
    assert embed(A, B, 1) == 1


def test_embedding_rejects_bad_pairs():
    with pytest.raises(ValueError):
        embedding(make_field(2, 2), make_field(2, 3))
    with pytest.raises(ValueError):
        embedding(make_field(2), make_field(3))
    big, e = extension(make_field(2, 2), 2)
    outside = next(b for b in big.elements() if not big.in_subfield(b, 2))
    with pytest.raises(ValueError):
        e.preimage(outside)


def test_prime_helpers():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(200) if is_prime(n)] == primes_up_to(199)
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)
    assert prime_factors(360) == [2, 3, 5]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [mobius(n) for n in range(1, 11)] == [O.mobius(n) for n in range(1, 11)]
