"""Sparse polynomials f(T, X) and ternary forms F(X0, X1, X2) over GF(q).

Variable convention: X0 is the line at infinity, X1 pairs with T and X2 with
X, so homogenizing T^i X^j in degree d gives X0^(d-i-j) X1^i X2^j.
"""

from . import unipoly as U
from .unipoly import UniPoly


class SparsePoly:
    """Polynomial as a dict from exponent tuples to nonzero field elements."""

    nvars = 0
    names = ()

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars or min(e) < 0:
                raise ValueError(f"bad exponent {e} for {type(self).__name__}")
            ctx.check(c)
            if c:
                clean[e] = c
        self.ctx = ctx
        self.terms = clean

    @classmethod
    def _raw(cls, ctx, terms, *extra):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    def _like(self, terms):
        return self._raw(self.ctx, terms)

    @property
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((type(self), self.ctx, frozenset(self.terms.items())))

    def _check_ctx(self, other):
        if other.ctx != self.ctx:
            raise ValueError(f"mixed contexts {self.ctx} and {other.ctx}")

    def __add__(self, other):
        self._check_ctx(other)
        add = self.ctx.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._like(out)

    def __neg__(self):
        n = self.ctx.neg
        return self._like({e: n(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ctx.from_int(other))
        self._check_ctx(other)
        mul, add = self.ctx.mul, self.ctx.add
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = add(out.get(e, 0), mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = self._like({(0,) * self.nvars: 1})
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, c):
        if not c:
            return self._like({})
        m = self.ctx.mul
        return self._like({e: m(v, c) for e, v in self.terms.items()})

    def diff(self, var):
        """Formal partial derivative with respect to variable index ``var``."""
        fi, m = self.ctx.from_int, self.ctx.mul
        out = {}
        for e, c in self.terms.items():
            n = fi(e[var])
            if n:
                e2 = list(e)
                e2[var] -= 1
                out[tuple(e2)] = m(n, c)
        return self._like(out)

    def evaluate(self, point, ctx=None, embed=None):
        """Value at ``point``; coefficients are pushed through ``embed`` into ``ctx``."""
        ctx = ctx or self.ctx
        mul, add, pw = ctx.mul, ctx.add, ctx.pow
        acc = 0
        for e, c in self.terms.items():
            v = embed(c) if embed else c
            for x, k in zip(point, e):
                if k:
                    v = mul(v, pw(x, k))
            acc = add(acc, v)
        return acc

    def map_coeffs(self, fn, ctx):
        """Same monomials over ``ctx`` with coefficients sent through ``fn``."""
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return self._raw(ctx, out, *self._extra())

    def _extra(self):
        return ()

    def leading(self):
        """(exponent, coefficient) of the lexicographically largest monomial."""
        e = max(self.terms)
        return e, self.terms[e]

    def normalized(self):
        """Scalar multiple with leading coefficient 1."""
        if not self.terms:
            return self
        return self.scale(self.ctx.inv(self.leading()[1]))

    def is_associate(self, other):
        """True iff self = lambda * other for a nonzero scalar lambda."""
        self._check_ctx(other)
        if not self.terms or not other.terms:
            return not self.terms and not other.terms
        return self.scale(other.leading()[1]) == other.scale(self.leading()[1])

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        from .parse import format_element

        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            cs = format_element(self.ctx, c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.ctx}, {str(self)!r})"


class BiPoly(SparsePoly):
    """f(T, X) = sum c_ij T^i X^j; exponents are (i, j)."""

    nvars = 2
    names = ("T", "X")
    __slots__ = ()

    def deg_T(self):
        return max((e[0] for e in self.terms), default=-1)

    def deg_X(self):
        return max((e[1] for e in self.terms), default=-1)

    def columns(self, var=1):
        """Coefficient lists in the other variable, indexed by the power of ``var``."""
        other = 1 - var
        n = max((e[var] for e in self.terms), default=-1)
        cols = [[] for _ in range(n + 1)]
        for e, c in self.terms.items():
            col = cols[e[var]]
            if len(col) <= e[other]:
                col.extend([0] * (e[other] + 1 - len(col)))
            col[e[other]] = c
        return cols

    @classmethod
    def from_columns(cls, ctx, cols, var=1):
        terms = {}
        for j, col in enumerate(cols):
            for i, c in enumerate(col):
                if c:
                    terms[(i, j) if var == 1 else (j, i)] = c
        return cls._raw(ctx, terms)

    def specialize_linear(self, a1, a2):
        """f(T, a1*T + a2) as a :class:`UniPoly`."""
        self.ctx.check(a1)
        self.ctx.check(a2)
        return UniPoly._raw(self.ctx, specialize_columns(self.ctx, self.columns(), a1, a2))

    def homogenize(self):
        if not self.terms:
            raise ValueError("cannot homogenize the zero polynomial")
        d = self.total_degree
        return HomForm._raw(
            self.ctx, {(d - i - j, i, j): c for (i, j), c in self.terms.items()}, d
        )

    def swap(self):
        return self._like({(j, i): c for (i, j), c in self.terms.items()})


def specialize_columns(ctx, cols, a1, a2):
    """Horner in X: cols[j] are the T-coefficient lists of X^j."""
    if not cols:
        return []
    acc = list(cols[-1])
    if ctx.k == 1:
        p = ctx.p
        for col in reversed(cols[:-1]):
            nxt = [0] * (max(len(acc) + 1, len(col)))
            for i, c in enumerate(acc):
                if c:
                    nxt[i] += a2 * c
                    nxt[i + 1] += a1 * c
            for i, c in enumerate(col):
                nxt[i] += c
            acc = [c % p for c in nxt]
        return U.strip(acc)
    mul, add = ctx.mul, ctx.add
    for col in reversed(cols[:-1]):
        nxt = [0] * (max(len(acc) + 1, len(col)))
        for i, c in enumerate(acc):
            if c:
                nxt[i] = add(nxt[i], mul(a2, c))
                nxt[i + 1] = mul(a1, c)
        for i, c in enumerate(col):
            if c:
                nxt[i] = add(nxt[i], c)
        acc = nxt
    return U.strip(acc)


class HomForm(SparsePoly):
    """A form of fixed degree d in X0, X1, X2; the zero form keeps its degree."""

    nvars = 3
    names = ("X0", "X1", "X2")
    __slots__ = ("degree",)

    def __init__(self, ctx, terms=None, degree=None):
        super().__init__(ctx, terms)
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: monomial degrees {sorted(degs)}")
        if degree is None:
            if not degs:
                raise ValueError("the degree of a zero form must be given")
            degree = degs.pop()
        elif degs and degs != {degree}:
            raise ValueError(f"monomials have degree {degs.pop()}, expected {degree}")
        self.degree = degree

    @classmethod
    def _raw(cls, ctx, terms, degree=None):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        if degree is None:
            degree = max((sum(e) for e in terms), default=0)
        obj.degree = degree
        return obj

    def _extra(self):
        return (self.degree,)

    def _like(self, terms):
        return HomForm._raw(self.ctx, terms, max((sum(e) for e in terms), default=self.degree))

    def diff(self, var):
        d = super().diff(var)
        d.degree = max(self.degree - 1, 0)
        return d

    def partials(self):
        return tuple(self.diff(i) for i in range(3))

    def dehomogenize(self):
        """f(T, X) = F(1, T, X)."""
        add = self.ctx.add
        out = {}
        for (e0, e1, e2), c in self.terms.items():
            v = add(out.get((e1, e2), 0), c)
            if v:
                out[(e1, e2)] = v
            else:
                out.pop((e1, e2), None)
        return BiPoly._raw(self.ctx, out)

    def permute(self, perm):
        """Substitute X_i -> X_perm[i]."""
        out = {}
        for e, c in self.terms.items():
            e2 = [0, 0, 0]
            for i, k in enumerate(e):
                e2[perm[i]] += k
            out[tuple(e2)] = c
        return HomForm._raw(self.ctx, out, self.degree)

    def swap(self, i, j):
        perm = [0, 1, 2]
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def hessian(self):
        """Determinant of the matrix of second partials (a form of degree 3(d-2))."""
        first = self.partials()
        h = [[first[i].diff(j) for j in range(3)] for i in range(3)]
        det = (
            h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
            - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
            + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
        )
        det.degree = max(3 * (self.degree - 2), 0)
        return det

    def restrict_to_line(self, base, direction, ctx=None, embed=None):
        """Coefficient list of s -> F(base + s*direction) over ``ctx``."""
        ctx = ctx or self.ctx
        lines = [[b, v] for b, v in zip(base, direction)]
        acc = []
        for e, c in self.terms.items():
            term = [embed(c) if embed else c]
            for line, k in zip(lines, e):
                for _ in range(k):
                    term = U.mul(ctx, term, U.strip(list(line)))
            acc = U.add(ctx, acc, term)
        return acc


def resultant_columns(ctx, f, g):
    """Res of two polynomials in Y whose coefficients (lists in the remaining
    variable) are given constant term first, via a fraction-free Bareiss
    elimination of the Sylvester matrix."""
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        raise ValueError("resultant with the zero polynomial")
    size = m + n
    if size == 0:
        return [1]
    rows = []
    for r in range(n):
        row = [[] for _ in range(size)]
        for i, c in enumerate(reversed(f)):
            row[r + i] = list(c)
        rows.append(row)
    for r in range(m):
        row = [[] for _ in range(size)]
        for i, c in enumerate(reversed(g)):
            row[r + i] = list(c)
        rows.append(row)
    sign = 1
    prev = [1]
    for k in range(size - 1):
        if not rows[k][k]:
            for i in range(k + 1, size):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return []
        piv = rows[k][k]
        for i in range(k + 1, size):
            rik = rows[i][k]
            for j in range(k + 1, size):
                num = U.sub(ctx, U.mul(ctx, piv, rows[i][j]), U.mul(ctx, rik, rows[k][j]))
                quot, r = U.divmod_(ctx, num, prev)
                if r:
                    raise ArithmeticError("Bareiss division was not exact")
                rows[i][j] = quot
            rows[i][k] = []
        prev = piv
    det = rows[size - 1][size - 1]
    return U.neg(ctx, det) if sign < 0 else det


def resultant(f, g, var="X"):
    """Res_var(f, g) for BiPolys, as a UniPoly in the other variable."""
    if f.ctx != g.ctx:
        raise ValueError(f"mixed contexts {f.ctx} and {g.ctx}")
    if not f or not g:
        raise ValueError("resultant with the zero polynomial")
    idx = {"T": 0, "X": 1}[var]
    fc, gc = f.columns(idx), g.columns(idx)
    if len(fc) == 1 and len(gc) == 1:
        raise ValueError(f"{var} occurs in neither polynomial")
    return UniPoly._raw(f.ctx, resultant_columns(f.ctx, fc, gc))
