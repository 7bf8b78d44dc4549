"""
Counting irreducible specializations
====================================

For f(T, X) of degree d the number of pairs (a1, a2) with f(T, a1 T + a2)
irreducible is about q^2/d.  The error divided by q^(3/2) stays bounded.
"""

from ffcurves import count_irreducible_pairs, make_field, parse_poly

# %%
rows = []
for p, k in [(7, 1), (7, 2), (11, 1), (11, 2), (13, 1), (5, 3)]:
    F = make_field(p, k)
    rep = count_irreducible_pairs([parse_poly("X^2 - T^3 - T - 1", "bi", F)], F)
    rows.append((F.q, rep.N, float(rep.target), rep.normalized_error))

print(f"{'q':>5} {'N':>7} {'q^2/3':>10} {'err/q^1.5':>10}")
for q, n, target, err in rows:
    print(f"{q:5d} {n:7d} {target:10.1f} {err:10.4f}")

# %%
# Two polynomials at once: the target becomes q^2/(d1 d2).
F = make_field(3, 4)
fs = [parse_poly("X^2 - T - 1", "bi", F), parse_poly("X^2 - T + 1", "bi", F)]
print(count_irreducible_pairs(fs, F).summary())
