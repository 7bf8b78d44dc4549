"""Dense univariate polynomials over a finite field.

A polynomial is a list of encoded field elements, constant term first, with
no trailing zeros; ``[]`` is the zero polynomial.  The module-level functions
take the field context first and work on these lists; they are what the
census inner loop calls.  :class:`UniPoly` wraps them with operators.

Factor types are tuples of factor degrees in descending order, with
multiplicity, e.g. ``(2, 1, 1)`` for (T+1)^2 (T^2+T+1) over GF(2).
"""

from . import gf2
from .primes import prime_factors

X = [0, 1]


def strip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def add(ctx, f, g):
    if len(f) < len(g):
        f, g = g, f
    a = ctx.add
    out = list(f)
    for i, c in enumerate(g):
        if c:
            out[i] = a(out[i], c)
    return strip(out)


def neg(ctx, f):
    n = ctx.neg
    return [n(c) for c in f]


def sub(ctx, f, g):
    return add(ctx, f, neg(ctx, g))


def scale(ctx, f, c):
    if not c:
        return []
    m = ctx.mul
    return [m(a, c) for a in f]


def mul(ctx, f, g):
    if not f or not g:
        return []
    if ctx.k == 1:
        p = ctx.p
        out = [0] * (len(f) + len(g) - 1)
        for i, fi in enumerate(f):
            if fi:
                for j, gj in enumerate(g):
                    out[i + j] += fi * gj
        return [c % p for c in out]
    m, a = ctx.mul, ctx.add
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                if gj:
                    out[i + j] = a(out[i + j], m(fi, gj))
    return out


def monic(ctx, f):
    if not f:
        raise ZeroDivisionError("zero polynomial has no leading coefficient")
    lc = f[-1]
    if lc == 1:
        return list(f)
    return scale(ctx, f, ctx.inv(lc))


def divmod_(ctx, f, g):
    """Quotient and remainder; ``f = quot*g + rem`` with deg rem < deg g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    if len(f) <= dg:
        return [], list(f)
    m, s = ctx.mul, ctx.sub
    r = list(f)
    inv = ctx.inv(g[-1])
    quot = [0] * (len(f) - dg)
    for t in range(len(f) - 1, dg - 1, -1):
        c = r[t]
        if c:
            c = m(c, inv)
            quot[t - dg] = c
            base = t - dg
            for i in range(dg):
                if g[i]:
                    r[base + i] = s(r[base + i], m(c, g[i]))
    del r[dg:]
    return quot, strip(r)


def rem(ctx, f, g):
    return divmod_(ctx, f, g)[1]


def quo(ctx, f, g):
    return divmod_(ctx, f, g)[0]


def _rem_monic(ctx, r, g):
    # in-place reduction of r modulo the monic g
    dg = len(g) - 1
    if ctx.k == 1:
        p = ctx.p
        for t in range(len(r) - 1, dg - 1, -1):
            c = r[t] % p
            if c:
                base = t - dg
                for i in range(dg):
                    r[base + i] -= c * g[i]
        del r[dg:]
        return strip([c % p for c in r])
    m, s = ctx.mul, ctx.sub
    for t in range(len(r) - 1, dg - 1, -1):
        c = r[t]
        if c:
            base = t - dg
            for i in range(dg):
                if g[i]:
                    r[base + i] = s(r[base + i], m(c, g[i]))
    del r[dg:]
    return strip(r)


def mulmod(ctx, f, g, modulus):
    """f*g mod a monic modulus."""
    return _rem_monic(ctx, mul(ctx, f, g), modulus)


def powmod(ctx, f, n, modulus):
    """f^n mod a monic modulus, by square-and-multiply."""
    result = [1]
    base = _rem_monic(ctx, list(f), modulus)
    while n:
        if n & 1:
            result = mulmod(ctx, result, base, modulus)
        n >>= 1
        if n:
            base = mulmod(ctx, base, base, modulus)
    return result


def gcd(ctx, f, g):
    """Monic gcd; gcd(0, 0) = 0."""
    while g:
        f, g = g, rem(ctx, f, g)
    return monic(ctx, f) if f else []


def derivative(ctx, f):
    fi = ctx.from_int
    m = ctx.mul
    return strip([m(fi(i), c) for i, c in enumerate(f)][1:])


def evaluate(ctx, f, a):
    acc = 0
    m, ad = ctx.mul, ctx.add
    for c in reversed(f):
        acc = ad(m(acc, a), c)
    return acc


def pth_root(ctx, f):
    """The polynomial g with g^p = f; f must have only p-th power monomials."""
    p = ctx.p
    e = ctx.q // p
    if any(c for i, c in enumerate(f) if i % p):
        raise ValueError("not a p-th power")
    return [ctx.pow(c, e) for c in f[::p]]


def frobenius_rows(ctx, modulus):
    """Rows T^(j q) mod modulus for j < deg modulus.

    g -> g^q is GF(q)-linear on GF(q)[T]/(modulus), so these rows turn the
    q-th power map into a matrix-vector product.
    """
    n = len(modulus) - 1
    t_q = powmod(ctx, X, ctx.q, modulus)
    rows = [[1]]
    for _ in range(n - 1):
        rows.append(mulmod(ctx, rows[-1], t_q, modulus))
    return rows


def apply_frobenius(ctx, rows, g):
    """g^q modulo the modulus that ``rows`` was built from."""
    n = len(rows)
    if ctx.k == 1:
        p = ctx.p
        out = [0] * n
        for c, row in zip(g, rows):
            if c:
                for i, r in enumerate(row):
                    out[i] += c * r
        return strip([c % p for c in out])
    m, a = ctx.mul, ctx.add
    out = [0] * n
    for c, row in zip(g, rows):
        if c:
            for i, r in enumerate(row):
                if r:
                    out[i] = a(out[i], m(c, r))
    return strip(out)


def is_irreducible(ctx, f) -> bool:
    """Rabin's test: deg n = f is irreducible iff T^(q^n) = T mod f and
    gcd(T^(q^(n/l)) - T, f) = 1 for every prime l | n.

    Constants (units) are not irreducible; linear polynomials are.
    """
    f = strip(list(f))
    if not f:
        raise ValueError("the zero polynomial has no irreducibility status")
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if ctx.q == 2:
        return gf2.is_irreducible(gf2.to_int(f))
    f = monic(ctx, f)
    rows = frobenius_rows(ctx, f)
    need = {n // ell for ell in prime_factors(n)}
    h = rows[1] if n > 1 else []
    for i in range(1, n + 1):
        if i > 1:
            h = apply_frobenius(ctx, rows, h)
        if i in need and len(gcd(ctx, sub(ctx, h, X), f)) > 1:
            return False
    return h == X


def squarefree_decomposition(ctx, f):
    """Pairs (g, m) with g monic squarefree nonconstant and f = lc * prod g^m."""
    f = strip(list(f))
    if len(f) < 2:
        raise ValueError("squarefree decomposition needs a nonconstant polynomial")
    out = []
    _sqf(ctx, monic(ctx, f), 1, out)
    return out


def _sqf(ctx, f, mult, out):
    df = derivative(ctx, f)
    if not df:
        _sqf(ctx, pth_root(ctx, f), mult * ctx.p, out)
        return
    c = gcd(ctx, f, df)
    w = quo(ctx, f, c)
    i = 1
    while len(w) > 1:
        y = gcd(ctx, w, c)
        fac = quo(ctx, w, y)
        if len(fac) > 1:
            out.append((fac, i * mult))
        w = y
        c = quo(ctx, c, y)
        i += 1
    if len(c) > 1:
        _sqf(ctx, pth_root(ctx, c), mult * ctx.p, out)


def distinct_degree(ctx, g):
    """Pairs (d, count): g (monic, squarefree) has ``count`` irreducible factors of degree d."""
    out = []
    h = X
    i = 1
    while 2 * i <= len(g) - 1:
        h = powmod(ctx, h, ctx.q, g)
        d = gcd(ctx, g, sub(ctx, h, X))
        if len(d) > 1:
            out.append((i, (len(d) - 1) // i))
            g = quo(ctx, g, d)
            h = rem(ctx, h, g)
        i += 1
    if len(g) > 1:
        out.append((len(g) - 1, 1))
    return out


def factor_type(ctx, f):
    """Degrees of the irreducible factors of f, with multiplicity, descending."""
    f = strip(list(f))
    if len(f) < 2:
        raise ValueError("factor type of a constant polynomial is undefined")
    if ctx.q == 2:
        return gf2.factor_type(gf2.to_int(f))
    degrees = []
    for g, m in squarefree_decomposition(ctx, f):
        for d, count in distinct_degree(ctx, g):
            degrees.extend([d] * (count * m))
    return tuple(sorted(degrees, reverse=True))


def monic_polys(ctx, n):
    """All monic polynomials of degree n, in enumeration order."""
    q = ctx.q
    for idx in range(q**n):
        f = []
        for _ in range(n):
            idx, r = divmod(idx, q)
            f.append(r)
        f.append(1)
        yield f


def oracle_factor_type(ctx, f, bound=12):
    """Factor type by trial division over all monic candidates of degree <= deg/2.

    Slow and independent of :func:`factor_type`; meant for cross-checking.
    """
    f = strip(list(f))
    if len(f) < 2:
        raise ValueError("factor type of a constant polynomial is undefined")
    if len(f) - 1 > bound:
        raise ValueError(f"degree {len(f) - 1} exceeds the oracle bound {bound}")
    f = monic(ctx, f)
    out = []
    while len(f) > 1:
        for d in range(1, (len(f) - 1) // 2 + 1):
            for g in monic_polys(ctx, d):
                quot, r = divmod_(ctx, f, g)
                if not r:
                    out.append(d)
                    f = quot
                    break
            else:
                continue
            break
        else:
            out.append(len(f) - 1)
            break
    return tuple(sorted(out, reverse=True))


def count_irreducible(ctx, n):
    return sum(1 for f in monic_polys(ctx, n) if is_irreducible(ctx, f))


class UniPoly:
    """A polynomial in GF(q)[T]; immutable, hashable, with the usual operators."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        coeffs = strip([int(c) for c in coeffs])
        for c in coeffs:
            ctx.check(c)
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def T(cls, ctx):
        return cls(ctx, X)

    @classmethod
    def _raw(cls, ctx, coeffs):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(coeffs)
        return obj

    def _other(self, other):
        if isinstance(other, UniPoly):
            if other.ctx != self.ctx:
                raise ValueError(f"mixed contexts {self.ctx} and {other.ctx}")
            return list(other.coeffs)
        if isinstance(other, int):
            return strip([self.ctx.from_int(other)])
        return NotImplemented

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._raw(self.ctx, add(self.ctx, list(self.coeffs), o))

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.ctx, neg(self.ctx, self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._raw(self.ctx, sub(self.ctx, list(self.coeffs), o))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._raw(self.ctx, mul(self.ctx, self.coeffs, o))

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = self._raw(self.ctx, [1])
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __divmod__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        quot, r = divmod_(self.ctx, self.coeffs, o)
        return self._raw(self.ctx, quot), self._raw(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, a):
        return evaluate(self.ctx, self.coeffs, a)

    def gcd(self, other):
        return self._raw(self.ctx, gcd(self.ctx, list(self.coeffs), self._other(other)))

    def derivative(self):
        return self._raw(self.ctx, derivative(self.ctx, self.coeffs))

    def monic(self):
        return self._raw(self.ctx, monic(self.ctx, self.coeffs))

    def is_irreducible(self):
        return is_irreducible(self.ctx, self.coeffs)

    def factor_type(self):
        return factor_type(self.ctx, self.coeffs)

    def oracle_factor_type(self, bound=12):
        return oracle_factor_type(self.ctx, self.coeffs, bound)

    def __repr__(self):
        return f"UniPoly({self.ctx}, {list(self.coeffs)})"

    def __str__(self):
        from .parse import format_element

        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            cs = format_element(self.ctx, c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)
