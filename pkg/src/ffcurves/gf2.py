"""Polynomials over GF(2) packed into Python ints (bit i = coefficient of T^i).

Used transparently by :mod:`ffcurves.unipoly` when q = 2; the g^8 + T^3 scan runs
thousands of degree-96 tests and the list representation is far too slow there.
"""


def to_int(coeffs):
    a = 0
    for i, c in enumerate(coeffs):
        if c:
            a |= 1 << i
    return a


def to_list(a):
    return [int(c) for c in reversed(bin(a)[2:])] if a else []


def deg(a):
    return a.bit_length() - 1


def mul(a, b):
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def sqr(a):
    return int("0".join(bin(a)[2:]), 2) if a else 0


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def mod(a, b):
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def gcd(a, b):
    while b:
        a, b = b, mod(a, b)
    return a


def derivative(a):
    mask = ((1 << (2 * (a.bit_length() // 2 + 1))) - 1) // 3  # ...010101
    return (a >> 1) & mask


def sqrt(a):
    """Square root of a polynomial whose odd coefficients all vanish."""
    bits = bin(a)[2:][::-1][::2]
    return int(bits[::-1], 2) if a else 0


def is_irreducible(f):
    from .primes import prime_factors

    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    need = {n // ell for ell in prime_factors(n)}
    h = 2  # T
    for i in range(1, n + 1):
        h = mod(sqr(h), f)
        if i in need and gcd(h ^ 2, f) != 1:
            return False
    return h == 2


def squarefree(f):
    """(factor, multiplicity) pairs with squarefree nonconstant factors."""
    out = []
    _sqf(f, 1, out)
    return out


def _sqf(f, mult, out):
    if deg(f) <= 0:
        return
    df = derivative(f)
    if not df:
        _sqf(sqrt(f), 2 * mult, out)
        return
    c = gcd(f, df)
    w = divmod_(f, c)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(w, c)
        fac = divmod_(w, y)[0]
        if deg(fac) > 0:
            out.append((fac, i * mult))
        w = y
        c = divmod_(c, y)[0]
        i += 1
    if deg(c) > 0:
        _sqf(sqrt(c), 2 * mult, out)


def distinct_degree(g):
    out = []
    h = 2
    i = 1
    while 2 * i <= deg(g):
        h = mod(sqr(h), g)
        d = gcd(g, h ^ 2)
        if deg(d) > 0:
            out.append((i, deg(d) // i))
            g = divmod_(g, d)[0]
            h = mod(h, g)
        i += 1
    if deg(g) > 0:
        out.append((deg(g), 1))
    return out


def factor_type(f):
    degrees = []
    for g, m in squarefree(f):
        for d, count in distinct_degree(g):
            degrees.extend([d] * (count * m))
    return tuple(sorted(degrees, reverse=True))
