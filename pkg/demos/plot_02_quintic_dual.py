"""
A quintic in characteristic 2 and its dual conic
================================================

The gradient of F = X1^5 + X1^2 X0^3 + X0^4 X2 over GF(2) is the square of
a map to P^2, so its tangent lines sweep out a conic.  Swapping X1 and X2
gives a different curve with the very same dual.
"""

from ffcurves import make_field, parse_poly
from ffcurves import curves as C

F2 = make_field(2)
gamma = parse_poly("X1^5 + X1^2*X0^3 + X0^4*X2", "hom", F2)
delta = gamma.swap(1, 2)

# %%
print("dual of", gamma, ":", C.dual_curve(gamma))
print("dual of", delta, ":", C.dual_curve(delta))

# %%
# The curve has one singular point and it is not a node, so the counting
# theorem's nodal hypothesis fails even though the other conditions hold.
report = C.check_char0like_nodal(gamma.dehomogenize())
for key, value in report.to_json().items():
    print(f"{key:28s} {value}")
