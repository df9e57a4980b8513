"""Y solves an implicit integral equation: the integrand's Wick sum is exactly 1."""

# %%
from graphchi.trees import renorm_check

for order in (2, 4, 6):
    rep = renorm_check(order)
    print(order, "passed" if rep.passed else rep.failure, [str(c) for c in rep.details["coefficients"]])

# %%
# Nudging Y breaks it at the first order touched.
from graphchi.series import TruncatedSeries
from graphchi.trees import compute_Y

bad = compute_Y(3).as_series() + TruncatedSeries([0, 0, 1], 3, "hbar")
rep = renorm_check(3, bad)
print("corrupted Y:", rep.failure)
