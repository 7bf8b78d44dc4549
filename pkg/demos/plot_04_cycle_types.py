"""
Factorization types against cycle types of S_3
==============================================

When the specializations have Galois group S_d, a random (a1, a2) should
factor with degree pattern lambda about as often as a permutation of type
lambda occurs in S_d.
"""

from ffcurves import factorization_census, make_field, parse_poly
from ffcurves.census import format_type

F = make_field(11, 2)
rep = factorization_census([parse_poly("X^2 - T^3 - T - 1", "bi", F)], F)

total = rep.nondegenerate_count
for key, dens in sorted(rep.predicted_table.items(), reverse=True):
    observed = rep.type_table.get(key, 0) / total
    print(f"{format_type(key):10s} observed {observed:.4f}  predicted {float(dens):.4f}")
print("total variation distance:", round(rep.tv_distance, 4))
