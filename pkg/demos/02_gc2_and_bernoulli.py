"""The Euler characteristic of GC_2 from log E, compared with Bernoulli numbers."""

# %%
from graphchi.genfunc import bernoulli, chi_gc2, compute_X

N = 15
X = compute_X(N)

# %%
# log E keeps only the connected graphs.  Odd coefficients are
# -B_(n+1)/(n(n+1)); even ones vanish.
print(f"{'rank':>4}  {'log E':>22}  {'closed form':>22}")
for n in range(1, N + 1):
    print(f"{n + 1:>4}  {str(X[n]):>22}  {str(chi_gc2(n)):>22}")
    assert X[n] == chi_gc2(n)

# %%
# The same numbers are the Stirling coefficients of log Γ, up to sign.
for k in range(1, 5):
    print(f"B_{2 * k} = {bernoulli(2 * k)}")
