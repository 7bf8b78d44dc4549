"""
Bateman-Horn singular series
============================

The twin-prime constant, Dirichlet's a/phi(a), and a comparison of the
prediction with actual prime counts.
"""

from ffcurves.bateman_horn import IntPoly, bh_report, singular_series

X = IntPoly([0, 1])

# %%
for cutoff in (10**2, 10**4, 10**6):
    print(cutoff, singular_series([X, IntPoly([2, 1])], cutoff).value)

print("3X + 1:", singular_series([IntPoly([1, 3])], 10**4).value)

# %%
# x / log(x)^2 underestimates the twin count at this size; the logarithmic
# integral form is much closer.
for form in ("literal", "integral"):
    rep = bh_report([X, IntPoly([2, 1])], 10**6, cutoff=10**5, form=form)
    print(form, rep.empirical, round(float(rep.prediction), 1), round(rep.ratio, 4))
