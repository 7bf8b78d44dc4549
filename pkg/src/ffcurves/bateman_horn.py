"""Integer-side quantities of the Bateman-Horn heuristic.

For irreducible f_1..f_r in Z[X] with positive leading coefficients,

    N(x) = #{1 <= n <= x : every f_i(n) is prime}
         ~ s / (deg f_1 ... deg f_r) * x / (log x)^r,
    s    = prod_p (1 - omega(p)/p) / (1 - 1/p)^r,

where omega(p) counts residues n mod p with f_1(n)...f_r(n) = 0 mod p.
"""

import json
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

import mpmath
import numpy as np
import sympy

from . import unipoly as U
from .field import PrimeField
from .primes import MR_LIMIT, is_prime, primes_up_to, sieve

PRECISION = 60  # decimal digits for the singular series
BRUTE_OMEGA_LIMIT = 2000  # evaluate at every residue below this prime
MAX_X = 10**8
SIEVE_LIMIT = 3 * 10**7


class IntPoly:
    """Polynomial with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if not c:
            raise ValueError("the zero polynomial is not allowed")
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def __call__(self, n):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def values(self, ns):
        """Vectorized evaluation (int64; callers guard the range)."""
        acc = np.zeros_like(ns)
        for c in reversed(self.coeffs):
            acc = acc * ns + c
        return acc

    def mod(self, p):
        return U.strip([c % p for c in self.coeffs])

    def is_irreducible(self):
        """Irreducible over Q (constants are not)."""
        if self.degree < 1:
            return False
        x = sympy.Symbol("x")
        return sympy.Poly(list(reversed(self.coeffs)), x, domain="QQ").is_irreducible

    def is_associate(self, other):
        """f = lambda g for a nonzero rational lambda."""
        if self.degree != other.degree:
            return False
        return all(a * other.leading == b * self.leading for a, b in zip(self.coeffs, other.coeffs))

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
            body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"IntPoly({str(self)!r})"


def validate(fs, require_irreducible=True):
    """Check the standing hypotheses: nonconstant, irreducible over Q, positive
    leading coefficients, pairwise non-associate."""
    if not fs:
        raise ValueError("need at least one polynomial")
    for f in fs:
        if f.degree < 1:
            raise ValueError(f"{f} is constant")
        if f.leading <= 0:
            raise ValueError(f"{f} has a non-positive leading coefficient")
        if require_irreducible and not f.is_irreducible():
            raise ValueError(f"{f} is reducible over Q")
    for i, f in enumerate(fs):
        for g in fs[i + 1 :]:
            if f.is_associate(g):
                raise ValueError(f"{f} and {g} are associate")


# ----------------------------------------------------------------- omega


def omega(fs, p):
    """#{0 <= n < p : f_1(n) ... f_r(n) = 0 mod p}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if all(f.degree <= 1 for f in fs):
        return _omega_linear(fs, p)
    if p < BRUTE_OMEGA_LIMIT:
        ns = np.arange(p, dtype=np.int64)
        hit = np.zeros(p, dtype=bool)
        for f in fs:
            acc = np.zeros(p, dtype=np.int64)
            for c in reversed(f.coeffs):
                acc = (acc * ns + c) % p
            hit |= acc == 0
        return int(hit.sum())
    return _omega_gcd(fs, p)


def _omega_linear(fs, p):
    roots = set()
    for f in fs:
        b, a = (f.coeffs + (0,))[:2]
        if a % p:
            roots.add(-b * pow(a, -1, p) % p)
        elif b % p == 0:
            return p
    return len(roots)


def _omega_gcd(fs, p):
    """Distinct roots of prod f_i mod p: deg gcd(prod f_i, X^p - X)."""
    ctx = PrimeField(p)
    prod = [1]
    for f in fs:
        g = f.mod(p)
        if not g:
            return p
        prod = U.mul(ctx, prod, g)
    if len(prod) == 1:
        return 0
    xp = U.powmod(ctx, U.X, p, prod)
    return len(U.gcd(ctx, prod, U.sub(ctx, xp, U.X))) - 1


# ------------------------------------------------------- singular series


@dataclass
class SingularSeries:
    cutoff: int
    value: Decimal
    zero_flag: bool
    factors: list = field(default_factory=list)  # (p, omega(p)) for every p <= cutoff

    def to_dict(self, log_limit=100):
        return {
            "cutoff": self.cutoff,
            "value": str(self.value),
            "zero_flag": self.zero_flag,
            "omega_log": [[p, w] for p, w in self.factors if p <= log_limit],
        }


def singular_series(fs, cutoff) -> SingularSeries:
    """Partial product of s over primes p <= cutoff, in increasing order."""
    if cutoff < 2:
        raise ValueError("cutoff must be at least 2")
    r = len(fs)
    factors = []
    zero = False
    with localcontext() as dc:
        dc.prec = PRECISION
        value = Decimal(1)
        for p in primes_up_to(cutoff):
            w = omega(fs, p)
            factors.append((p, w))
            if w == p:
                zero = True
            dp = Decimal(p)
            value *= (1 - Decimal(w) / dp) / (1 - 1 / dp) ** r
        if zero:
            value = Decimal(0)
        value = +value
    return SingularSeries(cutoff, value, zero, factors)


# ---------------------------------------------------------- prime counts


def _value_bound(fs, x):
    return max(max(abs(f(1)), abs(f(x)), sum(abs(c) for c in f.coeffs) * x**f.degree) for f in fs)


def empirical_count(fs, x, method="auto"):
    """N(x): the number of 1 <= n <= x with every f_i(n) prime.

    ``method`` is "sieve" (a boolean sieve up to the largest value),
    "mr" (deterministic Miller-Rabin per value) or "auto".
    """
    if x < 1:
        return 0
    if x > MAX_X:
        raise ValueError(f"x = {x} exceeds the supported bound {MAX_X}")
    bound = _value_bound(fs, x)
    if bound >= MR_LIMIT:
        raise OverflowError("polynomial values exceed the deterministic primality range")
    if method == "auto":
        method = "sieve" if bound <= SIEVE_LIMIT else "mr"
    if method == "sieve":
        if bound > SIEVE_LIMIT:
            raise ValueError(f"values up to {bound} are too large to sieve")
        ns = np.arange(1, x + 1, dtype=np.int64)
        is_p = sieve(int(max(f.values(ns).max() for f in fs)) + 1)
        ok = np.ones(x, dtype=bool)
        for f in fs:
            v = f.values(ns)
            good = v >= 2
            ok &= good
            ok[good] &= is_p[v[good]]
        return int(ok.sum())
    if method == "mr":
        return sum(1 for n in range(1, x + 1) if all(is_prime(f(n)) for f in fs))
    raise ValueError(f"unknown method {method!r}")


def log_integral(x, r):
    """int_2^x dt / (log t)^r."""
    with mpmath.workdps(30):
        return mpmath.quad(lambda t: 1 / mpmath.log(t) ** r, [2, x])


def bh_prediction(fs, x, series: SingularSeries, form="literal"):
    """s / prod(deg f_i) times x/(log x)^r ("literal") or the integral of
    1/(log t)^r from 2 to x ("integral")."""
    if x < 2:
        raise ValueError("x must be at least 2")
    r = len(fs)
    if series.zero_flag:
        return Decimal(0)
    degs = math.prod(f.degree for f in fs)
    with localcontext() as dc:
        dc.prec = PRECISION
        if form == "literal":
            main = Decimal(x) / Decimal(x).ln() ** r
        elif form == "integral":
            main = Decimal(mpmath.nstr(log_integral(x, r), 25))
        else:
            raise ValueError(f"unknown form {form!r}")
        return +(series.value / degs * main)


@dataclass
class BHReport:
    polys: list
    x: int
    series: SingularSeries
    empirical: int
    prediction: Decimal
    form: str
    warnings: list = field(default_factory=list)

    @property
    def ratio(self):
        if not self.empirical:
            return None
        return float(self.prediction) / self.empirical

    def to_dict(self):
        return {
            "schema": 1,
            "polys": list(self.polys),
            "x": self.x,
            "s_partial": str(self.series.value),
            "cutoff": self.series.cutoff,
            "zero_flag": self.series.zero_flag,
            "empirical": self.empirical,
            "prediction": str(self.prediction),
            "prediction_form": self.form,
            "ratio": self.ratio,
            "warnings": list(self.warnings),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def bh_report(fs, x, cutoff=10**6, form="literal", check=True) -> BHReport:
    if check:
        validate(fs)
    series = singular_series(fs, cutoff)
    warnings = []
    if series.zero_flag:
        warnings.append("omega(p) = p for some p: s = 0 and only finitely many n qualify")
    pred = bh_prediction(fs, x, series, form)
    return BHReport([str(f) for f in fs], x, series, empirical_count(fs, x), pred, form, warnings)
