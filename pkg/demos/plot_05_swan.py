"""
The polynomials g^8 + T^3 over GF(2)
====================================

Over GF(2) the polynomial g(T)^8 + T^3 is reducible for every g, so the
specialization count for X^8 + T^3 is zero: the curve is strange and the
counting theorem's hypotheses fail.
"""

from ffcurves import count_irreducible_pairs, make_field, parse_poly, swan_scan

res = swan_scan(12)
print("cases", res.cases, "all reducible", res.all_reducible)
for t, n in sorted(res.type_counts.items(), key=lambda kv: -kv[1])[:5]:
    print(" ", t, n)

F = make_field(2, 3)
print("N over GF(8):", count_irreducible_pairs([parse_poly("X^8 + T^3", "bi", F)], F).N)
