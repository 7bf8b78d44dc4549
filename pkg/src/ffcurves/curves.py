"""Plane curve geometry over finite fields.

Everything here decides, for a curve F(X0, X1, X2) = 0, the hypotheses that
the irreducible-specialization count needs: absolute irreducibility, the
singular points and whether they are nodes, and the three conditions that
make a curve "characteristic-0-like" (finitely many inflections, finitely
many bitangents, not strange).  Points over extensions GF(q^m) are handled by
building GF(q^m) directly and embedding the curve's coefficients into it.

Verdicts are plain strings: "yes", "no", "heuristic-yes", "unsupported",
"inconclusive" and "skipped".
"""

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import unipoly as U
from .bipoly import BiPoly, HomForm, resultant
from .field import embedding, extension, make_field
from .primes import divisors

MAX_DEGREE = 8
ROOT_FIELD_MAX = 1 << 16  # largest GF(q^m) searched exhaustively for roots
GRID_FIELD_MAX = 1 << 12  # largest GF(q^m) whose affine plane is swept for points
_GRID_CHUNK = 1 << 20


# ---------------------------------------------------------------- points


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^2 over ``ctx`` = GF(q^degree), first nonzero coordinate 1."""

    ctx: object
    coords: tuple
    degree: int = 1

    @classmethod
    def normalize(cls, ctx, coords, degree=1):
        coords = tuple(int(c) for c in coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        inv = ctx.inv(lead)
        return cls(ctx, tuple(ctx.mul(c, inv) for c in coords), degree)

    def to_json(self):
        return {
            "coords": [self.ctx.vector(c) if self.ctx.k > 1 else c for c in self.coords],
            "field": [self.ctx.p, self.ctx.k],
            "degree": self.degree,
        }

    def __str__(self):
        from .parse import format_element

        return "(" + ":".join(format_element(self.ctx, c) for c in self.coords) + ")"


def _subfield_degree(big, base_k, a, m):
    """Smallest j | m with a in GF(q^j), where q = p^base_k and big = GF(q^m)."""
    for j in divisors(m):
        if big.in_subfield(a, base_k * j):
            return j
    return m


def _point_degree(big, base_k, coords, m):
    return math.lcm(*(_subfield_degree(big, base_k, c, m) for c in coords))


def _lift(F, m):
    big, emb = extension(F.ctx, m)
    return big, emb, F.map_coeffs(emb, big)


# ------------------------------------------------ vectorized evaluation


def _eval_vec(big, G, xs):
    """Evaluate the form (or bivariate poly) G at broadcast coordinate arrays ``xs``."""
    xs = [np.asarray(x, dtype=np.int64) for x in xs]
    shape = np.broadcast_shapes(*(x.shape for x in xs))
    powers = []
    for var, x in enumerate(xs):
        top = max((e[var] for e in G.terms), default=0)
        pw = [np.ones_like(x)]
        for _ in range(top):
            pw.append(big.vmul(pw[-1], x))
        powers.append(pw)
    acc = np.zeros(shape, dtype=np.int64)
    for e, c in G.terms.items():
        term = np.full(shape, c, dtype=np.int64)
        for var, k in enumerate(e):
            if k:
                term = big.vmul(term, powers[var][k])
        acc = big.vadd(acc, term)
    return acc


def _normalize_rows(big, pts):
    """Scale each row of an (N, 3) array so its first nonzero entry is 1."""
    lead = np.where(pts[:, 0] != 0, pts[:, 0], np.where(pts[:, 1] != 0, pts[:, 1], pts[:, 2]))
    inv = big.vinv(lead)
    return big.vmul(pts, inv[:, None])


def _affine_points(big, G):
    """All points (1 : x1 : x2) of G = 0 over ``big``, as an (N, 3) array."""
    q = big.q
    xs = np.arange(q, dtype=np.int64)
    rows = max(1, _GRID_CHUNK // q)
    found = []
    for start in range(0, q, rows):
        x1 = xs[start : start + rows, None]
        vals = _eval_vec(big, G, (np.int64(1), x1, xs[None, :]))
        i, j = np.nonzero(vals == 0)
        if len(i):
            found.append(np.stack([np.ones_like(i), x1[i, 0], xs[j]], axis=1))
    if not found:
        return np.zeros((0, 3), dtype=np.int64)
    return np.concatenate(found)


@dataclass
class _Sample:
    big: object
    m: int
    points: np.ndarray  # simple affine points
    duals: np.ndarray  # normalized gradients, row-aligned with points


@lru_cache(maxsize=64)
def _sample(F, m):
    big, _, G = _lift(F, m)
    pts = _affine_points(big, G)
    grads = np.stack([_eval_vec(big, d, pts.T) for d in G.partials()], axis=1) if len(pts) else pts
    simple = np.any(grads != 0, axis=1) if len(pts) else np.zeros(0, dtype=bool)
    pts, grads = pts[simple], grads[simple]
    duals = _normalize_rows(big, grads) if len(pts) else grads
    return _Sample(big, m, pts, duals)


def simple_points(F, count, distinct_duals=False):
    """A sample over the smallest GF(q^m) with at least ``count`` simple affine
    points (or distinct dual images); the largest available sample otherwise."""
    best = None
    m = 1
    while F.ctx.q**m <= GRID_FIELD_MAX:
        s = _sample(F, m)
        n = len(np.unique(s.duals, axis=0)) if distinct_duals and len(s.duals) else len(s.points)
        best = s
        if n >= count:
            return s
        m += 1
    return best


# ------------------------------------------------ absolute irreducibility


def _taylor_shift(ctx, c, s0):
    """c(S + s0)."""
    out = []
    lin = U.strip([s0, 1])
    for a in reversed(c):
        out = U.add(ctx, U.mul(ctx, out, lin), [a] if a else [])
    return out


def _ser_mul(ctx, a, b, n):
    mul, add = ctx.mul, ctx.add
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] = add(out[i + j], mul(ai, b[j]))
    return out


def _ser_inv(ctx, a, n):
    mul, add, neg = ctx.mul, ctx.add, ctx.neg
    inv0 = ctx.inv(a[0])
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        s = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            if a[i]:
                s = add(s, mul(a[i], out[k - i]))
        out[k] = neg(mul(s, inv0))
    return out


def _ser_eval(ctx, cols, x, n):
    acc = (list(cols[-1]) + [0] * n)[:n]
    for col in reversed(cols[:-1]):
        acc = _ser_mul(ctx, acc, x, n)
        for i, c in enumerate(col[:n]):
            acc[i] = ctx.add(acc[i], c)
    return acc


def _lift_root(ctx, cols, dcols, y0, n):
    """Newton-lift a simple root y0 of f(0, Y) to a power series root mod S^n."""
    x = [y0] + [0] * (n - 1)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        fx = _ser_eval(ctx, cols, x[:prec], prec)
        dfx = _ser_eval(ctx, dcols, x[:prec], prec)
        step = _ser_mul(ctx, fx, _ser_inv(ctx, dfx, prec), prec)
        x = [ctx.sub(a, b) for a, b in zip(x[:prec], step)] + [0] * (n - prec)
    return x


def _divides(ctx, g_cols, f_cols):
    """True iff g divides f in ctx[S][Y] (both given as Y-columns of S-polys)."""
    r = [list(c) for c in f_cols]
    dg = len(g_cols) - 1
    lead = g_cols[-1]
    while len(r) - 1 >= dg:
        top = r[-1]
        if top:
            quot, rem = U.divmod_(ctx, top, lead)
            if rem:
                return False
            shift = len(r) - 1 - dg
            for i, gc in enumerate(g_cols):
                r[shift + i] = U.sub(ctx, r[shift + i], U.mul(ctx, quot, gc))
        r.pop()
        while r and not r[-1]:
            r.pop()
    return not any(r)


def _good_point(f_cols, ctx, max_m):
    """Find (m, s0, j): s0 in GF(q^m) with f(s0, Y) squarefree of full degree,
    whose roots all lie in GF(q^(m j))."""
    n = len(f_cols) - 1
    for m in range(1, max_m + 1):
        if ctx.q**m > ROOT_FIELD_MAX:
            break
        big, emb = extension(ctx, m)
        cols = [[emb(c) for c in col] for col in f_cols]
        best = None
        for s0 in range(big.q):
            if m > 1 and _subfield_degree(big, ctx.k, s0, m) < m:
                continue
            fiber = U.strip([U.evaluate(big, c, s0) for c in cols])
            if len(fiber) - 1 != n:
                continue
            if len(U.gcd(big, fiber, U.derivative(big, fiber))) > 1:
                continue
            j = math.lcm(*U.factor_type(big, fiber))
            if big.q**j > ROOT_FIELD_MAX:
                continue
            if best is None or j < best[2]:
                best = (m, s0, j)
            if j == 1:
                break
        if best:
            return best
    return None


def _abs_irreducible_in(f, var):
    """Decide absolute irreducibility using ``var`` as the main variable, or
    return None when no good expansion point is available."""
    ctx = f.ctx
    f_cols = f.columns(var)
    n = len(f_cols) - 1
    if n == 1:
        return True
    found = _good_point(f_cols, ctx, max(f.total_degree, 1))
    if found is None:
        return None
    m, s0, j = found
    big, emb_m = extension(ctx, m)
    L, emb = extension(ctx, m * j)
    s0 = embedding(big, L)(s0)
    cols = [[emb(c) for c in col] for col in f_cols]
    shifted = [_taylor_shift(L, c, s0) for c in cols]
    deg_s = max(len(c) - 1 for c in cols)
    bound = deg_s + (len(cols[-1]) - 1)
    prec = bound + 2
    roots = L.roots([c[0] if c else 0 for c in shifted])
    if len(roots) != n:
        raise AssertionError("expansion point does not split as expected")
    dcols = [U.scale(L, c, L.from_int(i)) for i, c in enumerate(shifted)][1:]
    series = [_lift_root(L, shifted, dcols, y, prec) for y in roots]
    lc = (list(shifted[-1]) + [0] * prec)[:prec]
    for size in range(1, n // 2 + 1):
        for subset in _subsets(n, size):
            prod = [lc]
            for i in subset:
                x = series[i]
                nxt = [[0] * prec for _ in range(len(prod) + 1)]
                for k, c in enumerate(prod):
                    t = _ser_mul(L, c, x, prec)
                    nxt[k] = [L.sub(a, b) for a, b in zip(nxt[k], t)]
                    nxt[k + 1] = [L.add(a, b) for a, b in zip(nxt[k + 1], c)]
                prod = nxt
            if any(c[bound + 1 :] != [0] * (prec - bound - 1) for c in prod):
                continue
            cand = [_taylor_shift(L, U.strip(list(c[: bound + 1])), L.neg(s0)) for c in prod]
            content = []
            for c in cand:
                content = U.gcd(L, content, c)
            cand = [U.quo(L, c, content) for c in cand]
            if _divides(L, cand, cols):
                return False
    return True


def _subsets(n, size):
    from itertools import combinations

    return combinations(range(n), size)


def is_absolutely_irreducible(f: BiPoly):
    """True/False, or None when no good expansion point exists (inconclusive).

    f is split along one variable Y into Y-coefficients in the other; at a
    point s0 where f(s0, Y) is squarefree of full degree its roots lift to
    power series, and f is reducible over the algebraic closure iff some
    subset of those series multiplies (after clearing the leading
    coefficient) to a polynomial factor of f.  All series live in a single
    finite field, the splitting field of f(s0, Y).
    """
    if f.total_degree < 1:
        raise ValueError("absolute irreducibility of a constant is undefined")
    ctx = f.ctx
    if f.total_degree == 1:
        return True
    for var in (1, 0):
        cols = f.columns(var)
        if len(cols) == 1:
            continue
        content = []
        for c in cols:
            content = U.gcd(ctx, content, c)
        if len(content) > 1:
            return False
        df = f.diff(var)
        if not df:
            continue
        if not resultant(f, df, "X" if var == 1 else "T"):
            # f shares a factor with a nonzero derivative of lower degree
            return False
        res = _abs_irreducible_in(f, var)
        if res is not None:
            return res
    cols_x, cols_t = f.columns(1), f.columns(0)
    if len(cols_x) == 1 or len(cols_t) == 1:
        return False  # a polynomial in one variable of degree >= 2
    if not f.diff(0) and not f.diff(1):
        return False  # a p-th power over the perfect field GF(q)
    return None


# ---------------------------------------------------------- singular points


@dataclass
class SingularSearch:
    """Singular points found up to ``depth``; ``complete`` certifies that every
    candidate from the elimination was examined."""

    points: list
    complete: bool
    depth: int
    method: str


def _check_geometry_degree(F):
    if F.degree > MAX_DEGREE:
        raise ValueError(f"degree {F.degree} exceeds the geometry cap {MAX_DEGREE}")


def default_depth(F):
    return max(1, min(F.degree * (F.degree - 1), 6))


def singular_points(F: HomForm, depth=None) -> SingularSearch:
    """Common zeros of F and its partials over GF(q^m), m <= depth.

    The affine chart is reduced to one variable with a resultant; the degrees
    of its irreducible factors say exactly which extensions hold candidate
    coordinates, so the search is complete whenever they fit under ``depth``.
    """
    if F.degree < 2:
        raise ValueError("singular points need a curve of degree >= 2")
    _check_geometry_degree(F)
    depth = default_depth(F) if depth is None else depth
    ctx = F.ctx
    parts = F.partials()
    f = F.dehomogenize()
    dparts = [d.dehomogenize() for d in parts]
    elim = None
    for var in ("X", "T"):
        vi = 1 if var == "X" else 0
        if max((e[vi] for e in f.terms), default=0) < 1:
            continue
        for g in (dparts[2], dparts[1]) if var == "X" else (dparts[1], dparts[2]):
            if not g:
                continue
            r = resultant(f, g, var)
            if r:
                elim = (vi, list(r.coeffs))
                break
        if elim:
            break
    if elim is None:
        return _exhaustive_singular(F, depth)

    complete = True
    found = {}
    vi, res = elim
    needed = set()
    if len(res) > 1:
        for e in set(U.factor_type(ctx, res)):
            if e <= depth:
                needed.add(e)
            else:
                complete = False
    polys = [f] + dparts
    done = set()
    while needed - done:
        m = min(needed - done)
        done.add(m)
        if ctx.q**m > ROOT_FIELD_MAX:
            complete = False
            continue
        big, emb = extension(ctx, m)
        res_big = [emb(c) for c in res]
        lifted = [p.map_coeffs(emb, big) for p in polys]
        for t in big.roots(res_big):
            # restrict every polynomial to the line {other variable = t}
            uni = []
            for p in lifted:
                cols = p.columns(vi)
                uni.append(U.strip([U.evaluate(big, c, t) for c in cols]))
            g = []
            for u in uni:
                g = U.gcd(big, g, u)
            if not g:
                complete = False  # a whole line of singular points
                continue
            if len(g) < 2:
                continue
            for e in set(U.factor_type(big, g)):
                if e > 1:
                    if m * e <= depth:
                        needed.add(m * e)
                    else:
                        complete = False
            for y in big.roots(g):
                coords = (1, t, y) if vi == 1 else (1, y, t)
                _record(found, big, ctx, coords, m)
    complete &= _points_at_infinity(F, parts, depth, found)
    pts = sorted(found.values(), key=lambda P: (P.degree, P.coords))
    return SingularSearch(pts, complete, depth, "elimination")


def _record(found, big, ctx, coords, m):
    P = ProjPoint.normalize(big, coords, m)
    if _point_degree(big, ctx.k, P.coords, m) == m:
        found[(m, P.coords)] = P


def _points_at_infinity(F, parts, depth, found):
    ctx = F.ctx
    forms = (F,) + tuple(parts)
    if all(G.evaluate((0, 0, 1)) == 0 for G in forms):
        _record(found, ctx, ctx, (0, 0, 1), 1)
    # points (0 : 1 : t)
    g = []
    for G in forms:
        u = [0] * (G.degree + 1)
        for (e0, e1, e2), c in G.terms.items():
            if e0 == 0:
                u[e2] = c
        g = U.gcd(ctx, g, U.strip(u))
    if not g:
        raise ValueError("X0 divides the curve")
    if len(g) < 2:
        return True
    complete = True
    for e in sorted(set(U.factor_type(ctx, g))):
        if e > depth or ctx.q**e > ROOT_FIELD_MAX:
            complete = False
            continue
        big, emb = extension(ctx, e)
        for t in big.roots([emb(c) for c in g]):
            _record(found, big, ctx, (0, 1, t), e)
    return complete


def _exhaustive_singular(F, depth):
    ctx = F.ctx
    found = {}
    complete = True
    for m in range(1, depth + 1):
        if ctx.q**m > GRID_FIELD_MAX:
            complete = False
            break
        big, emb, G = _lift(F, m)
        forms = (G,) + G.partials()
        pts = _affine_points(big, G)
        if len(pts):
            ok = np.ones(len(pts), dtype=bool)
            for d in forms[1:]:
                ok &= _eval_vec(big, d, pts.T) == 0
            for row in pts[ok]:
                _record(found, big, ctx, tuple(row), m)
        for coords in [(0, 0, 1)] + [(0, 1, t) for t in range(big.q)]:
            if all(H.evaluate(coords) == 0 for H in forms):
                _record(found, big, ctx, coords, m)
    pts = sorted(found.values(), key=lambda P: (P.degree, P.coords))
    return SingularSearch(pts, complete, depth, "exhaustive")


def is_singular(F, P):
    big = P.ctx
    G = F.map_coeffs(embedding(F.ctx, big), big)
    return all(H.evaluate(P.coords) == 0 for H in (G,) + G.partials())


def initial_quadratic(F, P):
    """(a, b, c): the quadratic part a u^2 + b uv + c v^2 of F at P, in affine
    coordinates centred at P, plus the linear part for sanity checks."""
    big = P.ctx
    G = F.map_coeffs(embedding(F.ctx, big), big)
    i = next(idx for idx, c in enumerate(P.coords) if c)
    j, k = [idx for idx in range(3) if idx != i]
    mul, add, fi = big.mul, big.add, big.from_int
    out = {}
    for e, c in G.terms.items():
        # expand (P_j + u)^e_j (P_k + v)^e_k, truncated to degree 2
        pu = _binomial_row(big, P.coords[j], e[j])
        pv = _binomial_row(big, P.coords[k], e[k])
        coef = mul(c, big.pow(P.coords[i], e[i]))
        for a, ca in enumerate(pu):
            for b, cb in enumerate(pv):
                if a + b <= 2 and ca and cb:
                    out[(a, b)] = add(out.get((a, b), 0), mul(coef, mul(ca, cb)))
    return (
        out.get((2, 0), 0),
        out.get((1, 1), 0),
        out.get((0, 2), 0),
        (out.get((0, 0), 0), out.get((1, 0), 0), out.get((0, 1), 0)),
    )


def _binomial_row(big, x, n):
    """Coefficients of u^0, u^1, u^2 in (x + u)^n."""
    fi, pw, mul = big.from_int, big.pow, big.mul
    return [mul(fi(math.comb(n, a)), pw(x, n - a)) if a <= n else 0 for a in range(3)]


def classify_singularity(F: HomForm, P: ProjPoint) -> str:
    """"node" iff the quadratic initial form at P is two distinct lines."""
    if not is_singular(F, P):
        raise ValueError(f"{P} is not a singular point")
    big = P.ctx
    a, b, c, _ = initial_quadratic(F, P)
    if not (a or b or c):
        return "non-node"
    if big.p == 2:
        return "node" if b else "non-node"
    disc = big.sub(big.mul(b, b), big.mul(big.from_int(4), big.mul(a, c)))
    return "node" if disc else "non-node"


# ------------------------------------------------------------- dual curve


def _monomials(e):
    return [(e - i - j, i, j) for i in range(e + 1) for j in range(e + 1 - i)]


def _kernel(big, rows, ncols):
    """Basis of the right kernel of a matrix over ``big`` (Gaussian elimination)."""
    mul, sub, inv = big.mul, big.sub, big.inv
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = inv(m[r][c])
        m[r] = [mul(x, s) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row_r = m[r]
                m[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = big.neg(m[i][fc])
        basis.append(v)
    return basis


def dual_curve(F: HomForm, fresh=20, seed=None) -> HomForm:
    """Equation of the dual curve, normalized to leading coefficient 1.

    Gradients at sampled simple points are dual points; for e = 1, 2, ... the
    degree-e forms vanishing on more than e*d(d-1) of them are exactly the
    multiples of the dual equation, so the first nonzero kernel is it.  The
    result is re-checked on ``fresh`` further dual points.
    """
    d = F.degree
    if d < 2:
        raise ValueError("the dual curve needs a curve of degree >= 2")
    _check_geometry_degree(F)
    if not any(F.partials()):
        raise ValueError("all partial derivatives vanish identically")
    bound = d * (d - 1)
    for e in range(1, bound + 1):
        need = e * bound + 1
        sample = simple_points(F, need + fresh, distinct_duals=True)
        duals = np.unique(sample.duals, axis=0)
        if len(duals) < need:
            raise RuntimeError(
                f"only {len(duals)} distinct dual points up to GF({F.ctx.q}^{sample.m})"
            )
        duals = duals[random.Random(seed or 0).sample(range(len(duals)), len(duals))]
        big = sample.big
        mons = _monomials(e)
        used, check = duals[:need], duals[need:]
        rows = _monomial_matrix(big, mons, used)
        ker = _kernel(big, rows, len(mons))
        if not ker:
            continue
        if len(ker) > 1:
            raise RuntimeError(f"dual kernel of dimension {len(ker)} in degree {e}")
        G = HomForm._raw(big, {mon: c for mon, c in zip(mons, ker[0]) if c}, e).normalized()
        if len(check) and np.any(_eval_vec(big, G, check.T) != 0):
            raise RuntimeError("interpolated dual fails on fresh points")
        emb = embedding(F.ctx, big)
        return HomForm._raw(
            F.ctx, {mon: emb.preimage(c) for mon, c in G.terms.items()}, e
        ).normalized()
    raise RuntimeError("no dual equation found up to the Pluecker bound")


def _monomial_matrix(big, mons, pts):
    cols = []
    for mon in mons:
        col = np.ones(len(pts), dtype=np.int64)
        for var, k in enumerate(mon):
            for _ in range(k):
                col = big.vmul(col, pts[:, var])
        cols.append(col)
    return np.stack(cols, axis=1).tolist()


# ------------------------------------- flexes, bitangents, strangeness


def _tangent_multiplicity(big, G, P, L):
    """Order of vanishing at s = 0 of F(P + s Q), Q a second point on the line L."""
    cands = [_cross(big, L, P)] + [_cross(big, L, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    for Q in cands:
        if any(Q) and any(_cross(big, Q, P)):
            break
    else:
        raise AssertionError("no second point on the tangent")
    poly = G.restrict_to_line(P, Q, big)
    if not poly:
        return math.inf
    return next(i for i, c in enumerate(poly) if c)


def _cross(big, a, b):
    mul, sub = big.mul, big.sub
    return (
        sub(mul(a[1], b[2]), mul(a[2], b[1])),
        sub(mul(a[2], b[0]), mul(a[0], b[2])),
        sub(mul(a[0], b[1]), mul(a[1], b[0])),
    )


def _dot(big, a, b):
    mul, add = big.mul, big.add
    return add(add(mul(a[0], b[0]), mul(a[1], b[1])), mul(a[2], b[2]))


@dataclass
class InflectionCheck:
    verdict: str
    method: str
    witness: object = None


def has_finitely_many_inflections(F: HomForm, samples=40) -> InflectionCheck:
    """Are there only finitely many inflection points?

    In characteristic p > 3 with p not dividing d - 1 the flexes are the
    simple points on the Hessian, so there are finitely many iff the Hessian
    is not a multiple of F; one curve point where it is nonzero shows that,
    and more than d * 3(d - 2) zeros on the curve rule it out (Bezout).
    Otherwise we look for a simple point whose tangent meets the curve with
    multiplicity exactly 2 and a nonconstant dual map.
    """
    d = F.degree
    if d < 2:
        raise ValueError("inflections need a curve of degree >= 2")
    _check_geometry_degree(F)
    p = F.ctx.p
    if p > 3 and (d - 1) % p:
        H = F.hessian()
        if not H:
            return InflectionCheck("no", "hessian")
        need = d * H.degree + 1
        s = simple_points(F, need)
        big, emb, _ = _lift(F, s.m)
        Hb = H.map_coeffs(emb, big)
        vals = _eval_vec(big, Hb, s.points.T) if len(s.points) else np.zeros(0)
        nz = np.flatnonzero(vals != 0)
        if len(nz):
            return InflectionCheck("yes", "hessian", ProjPoint.normalize(big, s.points[nz[0]], s.m))
        if len(s.points) >= need:
            return InflectionCheck("no", "hessian")
        return InflectionCheck("unsupported", "hessian")
    s = simple_points(F, samples)
    if len(np.unique(s.duals, axis=0)) < 2:
        return InflectionCheck("unsupported", "sampled-tangent")
    big, _, G = _lift(F, s.m)
    for P, L in zip(s.points[:samples], s.duals[:samples]):
        P, L = tuple(int(x) for x in P), tuple(int(x) for x in L)
        if _tangent_multiplicity(big, G, P, L) == 2:
            return InflectionCheck("yes", "sampled-tangent", ProjPoint.normalize(big, P, s.m))
    return InflectionCheck("unsupported", "sampled-tangent")


@dataclass
class StrangeCheck:
    verdict: str  # "not_strange", "strange" or "inconclusive"
    point: object = None
    witness: tuple = ()


def is_strange(F: HomForm, samples=12, seed=None) -> StrangeCheck:
    """Are all tangents at simple points concurrent (a strange curve)?"""
    if F.degree < 2:
        raise ValueError("strangeness needs a curve of degree >= 2")
    _check_geometry_degree(F)
    s = simple_points(F, samples)
    if len(s.points) < samples:
        return StrangeCheck("inconclusive")
    big = s.big
    lines = [tuple(int(x) for x in row) for row in s.duals]
    random.Random(seed or 0).shuffle(lines)
    first = lines[0]
    second = next((L for L in lines if L != first), None)
    if second is None:
        return StrangeCheck("inconclusive")
    c = _cross(big, first, second)
    for L in lines:
        if _dot(big, L, c):
            lines_json = (first, second, L)
            return StrangeCheck(
                "not_strange",
                witness=tuple(ProjPoint.normalize(big, x, s.m) for x in lines_json),
            )
    return StrangeCheck("strange", point=ProjPoint.normalize(big, c, s.m))


@dataclass
class BitangentCheck:
    verdict: str
    method: str
    fibers: list = field(default_factory=list)


def dual_map_inseparable(F):
    """True iff every partial of F is a p-th power, so the Gauss map factors
    through Frobenius."""
    p = F.ctx.p
    return all(all(k % p == 0 for k in e) for d in F.partials() for e in d.terms)


def has_finitely_many_bitangents(F: HomForm, samples=20, seed=None) -> BitangentCheck:
    """Are there only finitely many bitangents?

    Decided via the fibers of the Gauss map P -> tangent at P.

    Curves of degree <= 3 have no bitangents (a bitangent would meet the curve
    four times).  Otherwise the Gauss map's fibers over sampled tangent lines
    are counted over a finite field: singleton fibers for an inseparable map
    mean it is purely inseparable, which forces finitely many bitangents;
    singleton fibers of a separable map are only sampling evidence.
    """
    d = F.degree
    if d < 2:
        raise ValueError("bitangents need a curve of degree >= 2")
    _check_geometry_degree(F)
    if d <= 3:
        return BitangentCheck("yes", "bezout")
    s = simple_points(F, 4 * samples)
    duals = [tuple(int(x) for x in row) for row in s.duals]
    if len(set(duals)) < 2:
        return BitangentCheck("no", "constant-gauss-map")
    counts = {}
    for y in duals:
        counts[y] = counts.get(y, 0) + 1
    chosen = sorted(counts)
    random.Random(seed or 0).shuffle(chosen)
    fibers = [counts[y] for y in chosen[:samples]]
    if min(fibers) >= 2:
        return BitangentCheck("no", "fiber-sampling", fibers)
    generic = max(set(fibers), key=lambda n: (fibers.count(n), -n))
    if generic != 1:
        return BitangentCheck("no", "fiber-sampling", fibers)
    if dual_map_inseparable(F) and all(n == 1 for n in fibers):
        return BitangentCheck("yes", "purely-inseparable", fibers)
    return BitangentCheck("heuristic-yes", "fiber-sampling", fibers)


# -------------------------------------------------------------- pipeline


@dataclass
class CurveReport:
    abs_irreducible: str = "skipped"
    singular_points: list = field(default_factory=list)
    singular_search_complete: bool = False
    smooth: bool = False
    nodal: bool = False
    finitely_many_inflections: str = "skipped"
    finitely_many_bitangents: str = "skipped"
    not_strange: str = "skipped"
    char0like_nodal: bool = False
    provenance: list = field(default_factory=list)
    heuristic_flags: list = field(default_factory=list)

    def to_json(self):
        return {
            "abs_irreducible": self.abs_irreducible,
            "singular_points": [
                {"point": P.to_json(), "classification": kind} for P, kind in self.singular_points
            ],
            "singular_search_complete": self.singular_search_complete,
            "smooth": self.smooth,
            "nodal": self.nodal,
            "finitely_many_inflections": self.finitely_many_inflections,
            "finitely_many_bitangents": self.finitely_many_bitangents,
            "not_strange": self.not_strange,
            "char0like_nodal": self.char0like_nodal,
            "provenance": list(self.provenance),
            "heuristic_flags": list(self.heuristic_flags),
        }


def _verdict(v):
    return {True: "yes", False: "no", None: "inconclusive"}[v]


def check_char0like_nodal(f: BiPoly, depth=None, seed=None) -> CurveReport:
    """Run every hypothesis check on the projective closure of f(T, X) = 0."""
    d = f.total_degree
    if d < 1:
        raise ValueError("need a nonconstant polynomial")
    rep = CurveReport()
    rep.abs_irreducible = _verdict(is_absolutely_irreducible(f))
    if rep.abs_irreducible != "yes":
        rep.provenance.append(f"absolute irreducibility: {rep.abs_irreducible}")
        return rep
    if d == 1:
        rep.smooth = rep.nodal = rep.singular_search_complete = True
        rep.finitely_many_inflections = "no"
        rep.finitely_many_bitangents = "yes"
        rep.not_strange = "no"
        rep.provenance.append("a line: every point is a flex and all tangents coincide")
        return rep
    F = f.homogenize()
    _check_geometry_degree(F)
    search = singular_points(F, depth)
    rep.singular_search_complete = search.complete
    rep.singular_points = [(P, classify_singularity(F, P)) for P in search.points]
    if not search.complete:
        rep.provenance.append(f"singular search incomplete up to depth {search.depth}")
    rep.smooth = search.complete and not search.points
    rep.nodal = search.complete and all(k == "node" for _, k in rep.singular_points)
    p = f.ctx.p
    if rep.smooth and (d * (d - 1)) % p:
        rep.finitely_many_inflections = "yes"
        rep.finitely_many_bitangents = "yes"
        rep.not_strange = "yes"
        rep.char0like_nodal = True
        rep.provenance.append("smooth with p not dividing d(d-1): characteristic-0-like and nodal")
        return rep
    infl = has_finitely_many_inflections(F)
    rep.finitely_many_inflections = infl.verdict
    rep.provenance.append(f"inflections via {infl.method}")
    if infl.method == "sampled-tangent":
        rep.heuristic_flags.append("inflections: sampled tangent multiplicity")
    bit = has_finitely_many_bitangents(F, seed=seed)
    rep.finitely_many_bitangents = bit.verdict
    rep.provenance.append(f"bitangents via {bit.method}")
    if bit.verdict == "heuristic-yes":
        rep.heuristic_flags.append("bitangents: sampled Gauss-map fibers")
    strange = is_strange(F, seed=seed)
    rep.not_strange = {"not_strange": "yes", "strange": "no"}.get(strange.verdict, "inconclusive")
    rep.char0like_nodal = (
        rep.nodal
        and rep.finitely_many_inflections == "yes"
        and rep.finitely_many_bitangents in ("yes", "heuristic-yes")
        and rep.not_strange == "yes"
    )
    return rep


def make_curve(p, k, text, mode="bi"):
    """Convenience: parse ``text`` over GF(p^k)."""
    from .parse import parse_poly

    return parse_poly(text, mode, make_field(p, k))
