"""Slow, independent reference implementations used to freeze expected values.

Nothing here imports the package's arithmetic: field elements are coefficient
tuples multiplied by schoolbook convolution and reduced by long division,
polynomials are factored by trial division, points are found by sweeping all
of P^2.
"""

import itertools
import math
from fractions import Fraction


# ---------------------------------------------------------------- GF(p^k)


def poly_rem(a, m, p):
    a = list(a)
    while len(a) >= len(m):
        c = a[-1] % p
        if c:
            shift = len(a) - len(m)
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return [x % p for x in a]


def has_root(f, p):
    return any(sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0 for x in range(p))


def monic_polys_p(p, n):
    for tail in itertools.product(range(p), repeat=n):
        yield list(tail) + [1]


def is_irreducible_p(f, p):
    """Trial division by every monic polynomial of degree <= deg f / 2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for g in monic_polys_p(p, d):
            if not any(poly_rem(f, g, p)):
                return False
    return True


def smallest_modulus(p, k):
    """Smallest monic irreducible of degree k, ordering coefficient vectors
    with the constant term most significant."""
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if is_irreducible_p(f, p):
            return tuple(f)


class SlowField:
    """GF(p^k) with elements as integers a = sum c_i p^i, arithmetic on vectors."""

    def __init__(self, p, k):
        self.p, self.k, self.q = p, k, p**k
        self.mod = smallest_modulus(p, k) if k > 1 else (0, 1)

    def vec(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def num(self, v):
        return sum(c * self.p**i for i, c in enumerate(v))

    def add(self, a, b):
        return self.num([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def neg(self, a):
        return self.num([(-x) % self.p for x in self.vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        va, vb = self.vec(a), self.vec(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                prod[i + j] += x * y
        if self.k == 1:
            return prod[0] % self.p
        r = poly_rem(prod, list(self.mod), self.p)
        return self.num(r + [0] * (self.k - len(r)))

    def pow(self, a, n):
        out = 1
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def inv(self, a):
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)


# ----------------------------------------------------- polynomials over GF(q)


def field_poly_rem(F, a, m):
    a = list(a)
    inv_lead = F.inv(m[-1])
    while len(a) >= len(m):
        c = F.mul(a[-1], inv_lead)
        if c:
            shift = len(a) - len(m)
            for i, mc in enumerate(m):
                a[shift + i] = F.sub(a[shift + i], F.mul(c, mc))
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def field_poly_quo(F, a, m):
    a = list(a)
    q = [0] * (len(a) - len(m) + 1)
    inv_lead = F.inv(m[-1])
    while len(a) >= len(m):
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(m)
        q[shift] = c
        for i, mc in enumerate(m):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, mc))
        a.pop()
    return q


def trial_factor_type(F, f):
    """Factor type by repeatedly stripping the smallest-degree monic divisor."""
    f = list(f)
    degrees = []
    d = 1
    while len(f) - 1 >= 2 * d:
        found = False
        for tail in itertools.product(range(F.q), repeat=d):
            g = list(tail) + [1]
            if not field_poly_rem(F, f, g):
                degrees.append(d)
                f = field_poly_quo(F, f, g)
                found = True
                break
        if not found:
            d += 1
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return tuple(sorted(degrees, reverse=True))


def necklace(q, n):
    """Number of monic irreducibles of degree n over GF(q)."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += mobius(n // d) * q**d
    return total // n


def mobius(n):
    out, m = 1, 2
    while m * m <= n:
        if n % m == 0:
            n //= m
            if n % m == 0:
                return 0
            out = -out
        m += 1
    return -out if n > 1 else out


# ------------------------------------------------------------ plane curves


def eval_form(F, terms, pt):
    acc = 0
    for e, c in terms.items():
        v = c
        for x, k in zip(pt, e):
            v = F.mul(v, F.pow(x, k))
        acc = F.add(acc, v)
    return acc


def diff_terms(F, terms, var):
    out = {}
    for e, c in terms.items():
        if e[var] % F.p:
            e2 = list(e)
            e2[var] -= 1
            out[tuple(e2)] = F.mul(c, e[var] % F.p)
    return {e: c for e, c in out.items() if c}


def projective_points(F):
    q = F.q
    yield (0, 0, 1)
    for t in range(q):
        yield (0, 1, t)
    for a in range(q):
        for b in range(q):
            yield (1, a, b)


def brute_singular_points(F, terms):
    forms = [terms] + [diff_terms(F, terms, i) for i in range(3)]
    return [P for P in projective_points(F) if all(eval_form(F, t, P) == 0 for t in forms)]


# ------------------------------------------------------------- census side


def brute_census(F, f_terms_list):
    """(N, degenerate, type counter) by direct substitution and trial division."""
    from collections import Counter

    degrees = [max(sum(e) for e in t) for t in f_terms_list]
    N = degen = 0
    types = Counter()
    for a1 in range(F.q):
        for a2 in range(F.q):
            specs = []
            for terms in f_terms_list:
                acc = []
                for (i, j), c in terms.items():
                    # c * T^i * (a1 T + a2)^j
                    lin = [a2, a1]
                    poly = [c]
                    for _ in range(j):
                        poly = _mul(F, poly, lin)
                    poly = [0] * i + poly
                    acc = _add(F, acc, poly)
                while acc and acc[-1] == 0:
                    acc.pop()
                specs.append(acc)
            is_degen = any(len(s) - 1 < d for s, d in zip(specs, degrees))
            ok = all(len(s) >= 2 and trial_factor_type(F, s) == (len(s) - 1,) for s in specs)
            N += ok
            if is_degen:
                degen += 1
            else:
                types[tuple(trial_factor_type(F, s) for s in specs)] += 1
    return N, degen, types


def _mul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _add(F, a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [F.add(x, y) for x, y in zip(a, b)]


def brute_cycle_density(d, lam):
    """Fraction of permutations of range(d) with cycle type lam."""
    target = tuple(sorted(lam, reverse=True))
    hits = 0
    for perm in itertools.permutations(range(d)):
        seen, lens = set(), []
        for s in range(d):
            if s not in seen:
                n, x = 0, s
                while x not in seen:
                    seen.add(x)
                    x = perm[x]
                    n += 1
                lens.append(n)
        hits += tuple(sorted(lens, reverse=True)) == target
    return Fraction(hits, math.factorial(d))


def sieve_primes(n):
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for m in range(2, int(n**0.5) + 1):
        if flags[m]:
            for j in range(m * m, n + 1, m):
                flags[j] = False
    return flags
