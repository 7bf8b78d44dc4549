"""Counting irreducible specializations f_i(T, a1*T + a2) over all of GF(q)^2.

A census enumerates the q^2 pairs (a1, a2), records for each whether every
specialization is irreducible, and (optionally) the tuple of factorization
types.  Pairs where some specialization drops below its generic degree
(``degenerate``) count towards N by their actual irreducibility but are kept
out of the factor-type table.

Work is split into a1-rows; each shard returns plain tallies that are summed,
so the result is the same for any number of workers.
"""

import csv
import io
import itertools
import json
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import gf2
from . import unipoly as U
from .bipoly import specialize_columns
from .field import make_field

THREADS_ENV = "SPECFIELD_THREADS"
SWAN_MAX_BOUND = 16
GROUP_MAX_ORDER = 8
SCHEMA = 1


def _rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_type(key):
    """((2,), (1, 1)) -> '{2};{1,1}'."""
    return ";".join("{" + ",".join(map(str, t)) + "}" for t in key)


# ----------------------------------------------------------- cycle types


def partitions(d, largest=None):
    """Partitions of d as descending tuples, in reverse lexicographic order."""
    if largest is None:
        largest = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def cycle_type_density(d, cycle_type) -> Fraction:
    """Proportion of S_d with the given cycle type: 1 / prod k^m_k m_k!."""
    parts = tuple(cycle_type)
    if any(k < 1 for k in parts) or sum(parts) != d:
        raise ValueError(f"{parts} is not a partition of {d}")
    denom = 1
    for k, m in Counter(parts).items():
        denom *= k**m * math.factorial(m)
    return Fraction(1, denom)


def predicted_table(degrees):
    """Product densities over all r-tuples of cycle types."""
    out = {}
    for key in itertools.product(*(list(partitions(d)) for d in degrees)):
        dens = Fraction(1)
        for d, lam in zip(degrees, key):
            dens *= cycle_type_density(d, lam)
        out[key] = dens
    return out


# --------------------------------------------------------------- reports


@dataclass
class CensusReport:
    q: int
    p: int
    k: int
    polys: list
    degrees: list
    d: int
    N: int
    target: Fraction
    abs_error: Fraction
    normalized_error: float
    degenerate_count: int
    degenerate_irreducible: int
    type_table: dict = field(default_factory=dict)
    predicted_table: dict = field(default_factory=dict)
    tv_distance: float = None
    warnings: list = field(default_factory=list)
    hypotheses: list = field(default_factory=list)

    @property
    def nondegenerate_count(self):
        return self.q * self.q - self.degenerate_count

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "q": self.q,
            "p": self.p,
            "k": self.k,
            "polys": list(self.polys),
            "degrees": list(self.degrees),
            "d": self.d,
            "N": self.N,
            "target": _rational(self.target),
            "target_float": float(self.target),
            "abs_error": _rational(self.abs_error),
            "abs_error_float": float(self.abs_error),
            "normalized_error": self.normalized_error,
            "degenerate_count": self.degenerate_count,
            "degenerate_irreducible": self.degenerate_irreducible,
            "nondegenerate_count": self.nondegenerate_count,
            "type_table": {format_type(k): v for k, v in sorted(self.type_table.items(), reverse=True)},
            "predicted_table": {
                format_type(k): _rational(v) for k, v in sorted(self.predicted_table.items(), reverse=True)
            },
            "tv_distance": self.tv_distance,
            "warnings": list(self.warnings),
            "hypotheses": list(self.hypotheses),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["factor_type", "observed", "observed_frequency", "predicted", "predicted_float"])
        total = self.nondegenerate_count
        keys = sorted(set(self.type_table) | set(self.predicted_table), reverse=True)
        for key in keys:
            n = self.type_table.get(key, 0)
            pred = self.predicted_table.get(key)
            w.writerow(
                [
                    format_type(key),
                    n,
                    f"{n / total:.6f}" if total else "",
                    _rational(pred) if pred is not None else "",
                    f"{float(pred):.6f}" if pred is not None else "",
                ]
            )
        return buf.getvalue()

    def summary(self):
        lines = [
            f"GF({self.p}^{self.k}), d = {self.d}: N = {self.N}, q^2/d = {float(self.target):.3f}, "
            f"|N - q^2/d| / q^1.5 = {self.normalized_error:.4f}",
            f"degenerate pairs: {self.degenerate_count} ({self.degenerate_irreducible} irreducible)",
        ]
        if self.tv_distance is not None:
            lines.append(f"total variation vs. cycle-type densities: {self.tv_distance:.4f}")
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)


# ------------------------------------------------------------ enumeration


def _validate(fs, ctx):
    if not fs:
        raise ValueError("need at least one polynomial")
    for f in fs:
        if f.ctx != ctx:
            raise ValueError(f"polynomial {f} is over {f.ctx}, not {ctx}")
        if f.total_degree < 1:
            raise ValueError(f"polynomial {f} is constant")
    for f, g in itertools.combinations(fs, 2):
        if f.is_associate(g):
            raise ValueError(f"{f} and {g} are associate (one is a scalar multiple of the other)")


def _row_tally(p, k, all_cols, degrees, rows, want_types):
    """Tallies over the a1-rows ``rows``; runs in worker processes."""
    ctx = make_field(p, k)
    q = ctx.q
    fast2 = q == 2
    irreducible = gf2.is_irreducible if fast2 else None
    N = degenerate = degenerate_irr = 0
    types = Counter()
    for a1 in rows:
        for a2 in range(q):
            specs = [specialize_columns(ctx, cols, a1, a2) for cols in all_cols]
            degen = any(len(s) - 1 < d for s, d in zip(specs, degrees))
            if want_types and not degen:
                key = tuple(U.factor_type(ctx, s) for s in specs)
                types[key] += 1
                if all(len(t) == 1 for t in key):
                    N += 1
                continue
            ok = True
            for s in specs:
                if len(s) < 2:
                    ok = False
                elif fast2:
                    ok = irreducible(gf2.to_int(s))
                else:
                    ok = U.is_irreducible(ctx, s)
                if not ok:
                    break
            N += ok
            if degen:
                degenerate += 1
                degenerate_irr += ok
    return N, degenerate, degenerate_irr, types


def worker_count(threads=None):
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer")
    return threads


def _enumerate(fs, ctx, want_types, threads=None):
    _validate(fs, ctx)
    degrees = [f.total_degree for f in fs]
    all_cols = [f.columns() for f in fs]
    q = ctx.q
    workers = min(worker_count(threads), q)
    if workers == 1:
        return _row_tally(ctx.p, ctx.k, all_cols, degrees, range(q), want_types)
    shards = [list(range(i, q, workers)) for i in range(workers)]
    totals = [0, 0, 0, Counter()]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_row_tally, ctx.p, ctx.k, all_cols, degrees, rows, want_types)
            for rows in shards
        ]
        for fut in futures:
            n, dg, di, ty = fut.result()
            totals[0] += n
            totals[1] += dg
            totals[2] += di
            totals[3].update(ty)
    return tuple(totals)


def _base_report(fs, ctx, tally):
    N, degenerate, degenerate_irr, types = tally
    degrees = [f.total_degree for f in fs]
    d = math.prod(degrees)
    q = ctx.q
    target = Fraction(q * q, d)
    abs_error = abs(N - target)
    rep = CensusReport(
        q=q,
        p=ctx.p,
        k=ctx.k,
        polys=[str(f) for f in fs],
        degrees=degrees,
        d=d,
        N=N,
        target=target,
        abs_error=abs_error,
        normalized_error=float(abs_error) / q**1.5,
        degenerate_count=degenerate,
        degenerate_irreducible=degenerate_irr,
        type_table=dict(types),
    )
    if ctx.p == 2 and len(fs) >= 2:
        rep.warnings.append(
            "outside proven scope: characteristic 2 with r >= 2, the count is measured, not predicted"
        )
    return rep


def count_irreducible_pairs(fs, ctx, threads=None) -> CensusReport:
    """Exact N = #{(a1, a2): every f_i(T, a1 T + a2) is irreducible}."""
    return _base_report(fs, ctx, _enumerate(fs, ctx, False, threads))


def _attach_hypotheses(rep, fs, seed=None):
    from .curves import MAX_DEGREE, check_char0like_nodal

    for f in fs:
        entry = {"poly": str(f)}
        if f.total_degree > MAX_DEGREE:
            entry["char0like_nodal"] = None
            entry["note"] = f"degree above the geometry cap {MAX_DEGREE}, not checked"
            rep.warnings.append(f"hypotheses of {f} not checked (degree {f.total_degree})")
        else:
            cr = check_char0like_nodal(f, seed=seed)
            entry.update(cr.to_json())
            if not cr.char0like_nodal:
                rep.warnings.append(f"{f} is not verified characteristic-0-like nodal")
            elif cr.heuristic_flags:
                rep.warnings.append(f"{f}: hypotheses rest on heuristic verdicts")
        rep.hypotheses.append(entry)
    return rep


def theorem_c_report(fs, ctx, check_hypotheses=True, threads=None, seed=None) -> CensusReport:
    """Count plus target, errors and (optionally) the curve hypotheses."""
    rep = count_irreducible_pairs(fs, ctx, threads)
    if check_hypotheses:
        _attach_hypotheses(rep, fs, seed)
    return rep


def tv_distance(observed: dict, predicted: dict) -> float:
    total = sum(observed.values())
    if total == 0:
        return None
    keys = set(observed) | set(predicted)
    return float(
        sum(abs(Fraction(observed.get(k, 0), total) - predicted.get(k, 0)) for k in keys) / 2
    )


def factorization_census(fs, ctx, threads=None, check_hypotheses=False, seed=None) -> CensusReport:
    """Count plus the factorization-type table over non-degenerate pairs,
    compared with the cycle-type densities of prod S_{d_i}."""
    rep = _base_report(fs, ctx, _enumerate(fs, ctx, True, threads))
    rep.predicted_table = predicted_table(rep.degrees)
    rep.tv_distance = tv_distance(rep.type_table, rep.predicted_table)
    if check_hypotheses:
        _attach_hypotheses(rep, fs, seed)
    return rep


# ------------------------------------------------------- g^8 + T^3 scan


@dataclass
class SwanResult:
    bound: int
    all_reducible: bool
    cases: int
    witnesses: list
    type_counts: dict

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "bound": self.bound,
            "all_reducible": self.all_reducible,
            "cases": self.cases,
            "irreducible_witnesses": list(self.witnesses),
            "factor_types": {
                ",".join(map(str, k)) if k else "constant": v
                for k, v in sorted(self.type_counts.items(), reverse=True)
            },
        }


def _eighth_power(g):
    for _ in range(3):
        g = gf2.sqr(g)
    return g


def swan_scan(degree_bound) -> SwanResult:
    """Check g^8 + T^3 over every g in GF(2)[T] of degree <= degree_bound.

    g is packed into an int (bit i = coefficient of T^i), so g runs over
    range(2^(bound+1)).  Witnesses are the g (as bit masks) giving an
    irreducible polynomial.
    """
    if not 0 <= degree_bound <= SWAN_MAX_BOUND:
        raise ValueError(f"degree bound must lie in [0, {SWAN_MAX_BOUND}]")
    cube = 0b1000
    witnesses = []
    types = Counter()
    cases = 1 << (degree_bound + 1)
    for g in range(cases):
        h = _eighth_power(g) ^ cube
        if gf2.deg(h) <= 0:
            types[()] += 1
            continue
        t = gf2.factor_type(h)
        types[t] += 1
        if len(t) == 1:
            witnesses.append(g)
    return SwanResult(degree_bound, not witnesses, cases, witnesses, dict(types))


# ------------------------------------------- centralizer of a regular group


def validate_group_table(table):
    """Check that ``table[a][b] = a*b`` defines a group on {0..d-1}; return d."""
    d = len(table)
    if d == 0:
        raise ValueError("empty group table")
    if any(len(row) != d for row in table):
        raise ValueError("group table is not square")
    if any(not (isinstance(x, int) and 0 <= x < d) for row in table for x in row):
        raise ValueError(f"entries must be integers in [0, {d})")
    ident = [e for e in range(d) if all(table[e][a] == a and table[a][e] == a for a in range(d))]
    if not ident:
        raise ValueError("no identity element")
    e = ident[0]
    for a in range(d):
        if not any(table[a][b] == e for b in range(d)):
            raise ValueError(f"element {a} has no inverse")
    for a, b, c in itertools.product(range(d), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"not associative at ({a}, {b}, {c})")
    return d


def regular_stabilizer_size(table) -> int:
    """|{tau in S_d : tau commutes with every left translation}|, by brute force."""
    d = validate_group_table(table)
    if d > GROUP_MAX_ORDER:
        raise ValueError(f"group order {d} exceeds {GROUP_MAX_ORDER}")
    translations = [tuple(table[s]) for s in range(d)]
    count = 0
    for tau in itertools.permutations(range(d)):
        # tau . theta(s) == theta(s) . tau  as maps x -> ...
        if all(tau[th[x]] == th[tau[x]] for th in translations for x in range(d)):
            count += 1
    return count


def cyclic_group(d):
    return [[(a + b) % d for b in range(d)] for a in range(d)]


def klein_four_group():
    return [[a ^ b for b in range(4)] for a in range(4)]


def symmetric_group_table(n):
    """Cayley table of S_n with permutations indexed in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms]


def parse_group(text):
    """'cyclic:5', 'klein', 'symmetric:3' -> Cayley table."""
    name, _, arg = text.partition(":")
    if name == "cyclic":
        return cyclic_group(int(arg))
    if name == "klein":
        return klein_four_group()
    if name == "symmetric":
        return symmetric_group_table(int(arg))
    raise ValueError(f"unknown group {text!r}; use cyclic:N, klein or symmetric:N")
