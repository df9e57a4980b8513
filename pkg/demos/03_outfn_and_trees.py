"""Out(F_n): trees, forests and the series Y."""

# %%
import math

from graphchi.trees import compute_Y, rooted_gf, tree_gf
from graphchi.series import TruncatedSeries, log_series

# Rooted trees at λ = -1 sum to log(1+x).
R = rooted_gf(12, -1)
assert R == log_series(TruncatedSeries([1, 1], 12))
print("n! [x^n] R(-1,x):", [R[n] * math.factorial(n) for n in range(1, 8)])

# %%
# Unrooted trees: n! [x^n] T = (-1)^n (n-2)!.
T = tree_gf(10)
print("n! [x^n] T:", [T[n] * math.factorial(n) for n in range(3, 11)])

# %%
# Forests of trees fill in graph-with-forest pairs; the log is Y.
Y = compute_Y(12)
for n in range(1, 13):
    print(f"chi(Out(F_{n + 1})) = {Y[n]}  (~{float(Y[n]):.3e})")

# %%
# Every coefficient is negative.
assert all(Y[n] < 0 for n in range(1, 13))
