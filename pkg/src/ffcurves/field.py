"""Finite fields GF(p^k) with elements encoded as plain integers.

The element a_0 + a_1 x + ... + a_{k-1} x^{k-1} of GF(p)[x]/(m) is encoded as
the integer a_0 + a_1 p + ... + a_{k-1} p^{k-1}.  Hence ``range(q)`` is the
enumeration order (constant term varies fastest), and the prime field sits in
every extension as the integers 0..p-1.

Extension fields are table driven (exp/log plus an addition table or Zech
logarithms), which keeps the scalar hot paths to a couple of list lookups.
Every table also exists as a numpy array for vectorized evaluation.
"""

import functools
import math

import numpy as np

from .primes import is_prime, prime_factors

MAX_ORDER = 1 << 20
_FULL_ADD_TABLE = 1024  # largest odd-characteristic q with a q*q addition table


class FieldCtx:
    """Common interface of :class:`PrimeField` and :class:`ExtensionField`.

    Instances are immutable and canonical: ``make_field(p, k)`` always returns
    the same object, so contexts compare by ``(p, k)``.
    """

    p: int
    k: int
    q: int
    modulus: tuple

    zero = 0
    one = 1

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    def __reduce__(self):
        return make_field, (self.p, self.k)

    def elements(self):
        """All q elements in enumeration order."""
        return range(self.q)

    def vector(self, a):
        """Coefficient vector (constant term first) of the encoded element a."""
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_vector(self, v):
        if len(v) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(v)}")
        a = 0
        for c in reversed(v):
            a = a * self.p + c % self.p
        return a

    def elem(self, value):
        """Wrap an encoded integer or coefficient vector as an :class:`FFElem`."""
        if not isinstance(value, int):
            value = self.from_vector(tuple(value))
        self.check(value)
        return FFElem(self, value)

    def check(self, a):
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self}")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        acc = 1
        while n:
            if n & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            n >>= 1
        return acc

    def in_subfield(self, a, j):
        """True iff a lies in GF(p^j); j must divide k."""
        return self.pow(a, self.p**j) == a

    def from_int(self, n):
        """Image of the integer n under Z -> GF(p)."""
        return n % self.p

    def evaluate_all(self, coeffs):
        """Values of the polynomial ``coeffs`` (constant first) at every element."""
        xs = np.arange(self.q, dtype=np.int64)
        acc = np.zeros(self.q, dtype=np.int64)
        for c in reversed(coeffs):
            acc = self.vadd(self.vmul(acc, xs), np.int64(c))
        return acc

    def roots(self, coeffs):
        """All roots in this field of a nonzero polynomial, by exhaustive search."""
        if not any(coeffs):
            raise ValueError("zero polynomial has every element as a root")
        return np.flatnonzero(self.evaluate_all(coeffs) == 0).tolist()


class PrimeField(FieldCtx):
    def __init__(self, p):
        self.p = p
        self.k = 1
        self.q = p
        self.modulus = (0, 1)

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a):
        return self.p - a if a else 0

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        return pow(a, n, self.p)

    def vadd(self, a, b):
        return (a + b) % self.p

    def vmul(self, a, b):
        return (a * b) % self.p

    def vneg(self, a):
        return (-a) % self.p

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        acc = np.ones_like(a)
        base = a % self.p
        n = self.p - 2
        while n:
            if n & 1:
                acc = acc * base % self.p
            base = base * base % self.p
            n >>= 1
        return acc


class ExtensionField(FieldCtx):
    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.q = q = p**k
        self.modulus = tuple(modulus)
        digits = _digits(q, p, k)
        self.generator = g = _primitive_element(p, k, self.modulus)
        exp = _power_table(g, q, p, k, self.modulus)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self._exp_np = np.concatenate([exp, exp])
        self._log_np = log
        self._exp = self._exp_np.tolist()
        self._log = log.tolist()
        weights = p ** np.arange(k, dtype=np.int64)
        self._neg_np = ((-digits) % p) @ weights
        self._neg = self._neg_np.tolist()
        self._add_np = self._zech_np = None
        if p == 2:
            self.add = self.sub = _xor
            self.neg = _identity
        elif q <= _FULL_ADD_TABLE:
            table = np.zeros((q, q), dtype=np.int64)
            for i in range(k):
                d = digits[:, i]
                table += ((d[:, None] + d[None, :]) % p) * weights[i]
            self._add_np = table.ravel()
            self._add = self._add_np.tolist()
            self.add = self._add_table
        else:
            # zech[n] = log(1 + g^n), or -1 where 1 + g^n = 0
            one_plus = exp - exp % p + (exp % p + 1) % p
            zech = np.where(one_plus == 0, -1, log[one_plus])
            self._zech_np = zech
            self._zech = zech.tolist()
            self.add = self._add_zech

    def _add_table(self, a, b):
        return self._add[a * self.q + b]

    def _add_zech(self, a, b):
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        d = self._log[b] - la
        if d < 0:
            d += self.q - 1
        z = self._zech[d]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if a and b:
            return self._exp[self._log[a] + self._log[b]]
        return 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    def vmul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        r = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vadd(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.p == 2:
            return a ^ b
        if self._add_np is not None:
            return self._add_np[a * self.q + b]
        la = self._log_np[a]
        d = (self._log_np[b] - la) % (self.q - 1)
        z = self._zech_np[d]
        r = np.where(z < 0, 0, self._exp_np[la + np.maximum(z, 0)])
        return np.where(a == 0, b, np.where(b == 0, a, r))

    def vneg(self, a):
        return self._neg_np[np.asarray(a, dtype=np.int64)]

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == 0, 0, self._exp_np[self.q - 1 - self._log_np[a]])


def _xor(a, b):
    return a ^ b


def _identity(a):
    return a


@functools.lru_cache(maxsize=64)
def make_field(p: int, k: int = 1) -> FieldCtx:
    """The canonical field GF(p^k).

    The modulus is the lexicographically smallest monic irreducible of degree
    k over GF(p), comparing coefficient vectors from the constant term upward.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree {k!r} must be a positive integer")
    if p > MAX_ORDER or p**k > MAX_ORDER:
        raise ValueError(f"field order {p}^{k} exceeds the supported maximum {MAX_ORDER}")
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, canonical_modulus(p, k))


def canonical_modulus(p, k):
    """Smallest monic irreducible of degree k over GF(p), constant term first."""
    from .unipoly import is_irreducible

    base = make_field(p, 1)
    start = p ** (k - 1) if k > 1 else 0  # skip candidates divisible by x
    for idx in range(start, p**k):
        low = []
        for _ in range(k):
            idx, r = divmod(idx, p)
            low.append(r)
        low.reverse()  # the constant term is the most significant digit
        f = low + [1]
        if is_irreducible(base, f):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


def _digits(q, p, k):
    n = np.arange(q, dtype=np.int64)
    return np.stack([(n // p**i) % p for i in range(k)], axis=1)


def _mulmod_vec(a, b, mod, p, k):
    """Multiply digit rows of ``a`` and ``b`` (shape (N, k)) modulo ``mod``."""
    n = a.shape[0]
    prod = np.zeros((n, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        prod[:, i : i + k] += a[:, i : i + 1] * b
    # entries stay below 2k p^2 < 2^63 for every supported (p, k)
    for t in range(2 * k - 2, k - 1, -1):
        c = prod[:, t] % p
        for s in range(k):
            if mod[s]:
                prod[:, t - k + s] -= c * mod[s]
    return prod[:, :k] % p


def _encode(rows, p, k):
    return rows @ (p ** np.arange(k, dtype=np.int64))


def _scalar_mul(a, b, mod, p, k):
    da = np.array([[(a // p**i) % p for i in range(k)]], dtype=np.int64)
    db = np.array([[(b // p**i) % p for i in range(k)]], dtype=np.int64)
    return int(_encode(_mulmod_vec(da, db, mod, p, k), p, k)[0])


def _scalar_pow(a, n, mod, p, k):
    acc = 1
    while n:
        if n & 1:
            acc = _scalar_mul(acc, a, mod, p, k)
        a = _scalar_mul(a, a, mod, p, k)
        n >>= 1
    return acc


def _primitive_element(p, k, mod):
    order = p**k - 1
    cofactors = [order // r for r in prime_factors(order)]
    for g in range(2, p**k):
        if all(_scalar_pow(g, c, mod, p, k) != 1 for c in cofactors):
            return g
    raise AssertionError("multiplicative group is not cyclic")  # cannot happen


def _power_table(g, q, p, k, mod):
    """g^0, ..., g^(q-2) as encoded integers, computed in sqrt(q) blocks."""
    n = q - 1
    b = math.isqrt(n) + 1
    small = [1]
    for _ in range(b - 1):
        small.append(_scalar_mul(small[-1], g, mod, p, k))
    gb = _scalar_mul(small[-1], g, mod, p, k)
    big = [1]
    for _ in range(-(-n // b) - 1):
        big.append(_scalar_mul(big[-1], gb, mod, p, k))
    digits = _digits(q, p, k)
    rows_big = np.repeat(digits[big], len(small), axis=0)
    rows_small = np.tile(digits[small], (len(big), 1))
    return _encode(_mulmod_vec(rows_big, rows_small, mod, p, k), p, k)[:n]


class Embedding:
    """The ring embedding GF(p^k) -> GF(p^m), k | m, sending x to the smallest
    root (in enumeration order) of the source modulus."""

    def __init__(self, src: FieldCtx, dst: FieldCtx):
        if src.p != dst.p:
            raise ValueError(f"cannot embed {src} into {dst}: characteristics differ")
        if dst.k % src.k:
            raise ValueError(f"cannot embed {src} into {dst}: {src.k} does not divide {dst.k}")
        self.src, self.dst = src, dst
        if src.k == 1:
            self.image_of_x = None
            self.table = np.arange(src.q, dtype=np.int64)
        else:
            self.image_of_x = r = dst.roots(list(src.modulus))[0]
            powers = [1]
            for _ in range(src.k - 1):
                powers.append(dst.mul(powers[-1], r))
            digits = _digits(src.q, src.p, src.k)
            acc = np.zeros(src.q, dtype=np.int64)
            for i, r_i in enumerate(powers):
                acc = dst.vadd(acc, dst.vmul(digits[:, i], np.int64(r_i)))
            self.table = acc
        self._list = self.table.tolist()
        self._inverse = None

    def __call__(self, a):
        return self._list[a]

    def preimage(self, b):
        """The source element mapping to b; ``ValueError`` if b is not in the image."""
        if self._inverse is None:
            self._inverse = {v: i for i, v in enumerate(self._list)}
        try:
            return self._inverse[b]
        except KeyError:
            raise ValueError(f"{b} does not lie in the image of {self.src}") from None


@functools.lru_cache(maxsize=256)
def embedding(src: FieldCtx, dst: FieldCtx) -> Embedding:
    return Embedding(src, dst)


def embed(src: FieldCtx, dst: FieldCtx, a: int) -> int:
    return embedding(src, dst)(a)


def extension(ctx: FieldCtx, m: int):
    """GF(q^m) for ctx = GF(q), together with the embedding of ctx into it."""
    big = make_field(ctx.p, ctx.k * m)
    return big, embedding(ctx, big)


class FFElem:
    """A field element bound to its context, for interactive use.

    Library internals work on the bare integer encodings; this wrapper adds
    operators and refuses to mix contexts.
    """

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = value

    def _other(self, other):
        if isinstance(other, FFElem):
            if other.ctx != self.ctx:
                raise ValueError(f"mixed contexts {self.ctx} and {other.ctx}")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def _wrap(self, v):
        return FFElem(self.ctx, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.value))

    def __pow__(self, n):
        return self._wrap(self.ctx.pow(self.value, n))

    def inverse(self):
        return self._wrap(self.ctx.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def coeffs(self):
        return self.ctx.vector(self.value)

    def __repr__(self):
        return f"FFElem({self.ctx}, {list(self.coeffs)})"
