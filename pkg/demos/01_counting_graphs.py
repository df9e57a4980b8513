"""Counting leafless graphs with a formal Gaussian integral."""

# %%
# A graph with m edges and k vertices is a pairing of 2m half-edges plus a
# partition of them into k blocks of size >= 3.  Summing over all of these is
# the Wick sum of exp(Φ/hbar) with Φ = e^x - 1 - x - x^2/2.
from fractions import Fraction

from graphchi.genfunc import compute_E, compute_F, p_m
from graphchi.oracle import count_labeled_graphs

F = compute_F(4)
for n, c in enumerate(F.coefficients):
    print(f"[hbar^{n}] F = {c}")

# %%
# The hbar^1 term is three graphs: figure-eight (1/8), dumbbell (1/8), theta (1/12).
assert F[1] == Fraction(1, 8) + Fraction(1, 8) + Fraction(1, 12)

# %%
# Brute force agrees with the generating function edge by edge.
for m in range(2, 5):
    rows = {r.k: r for r in count_labeled_graphs(m)}
    p = p_m(m)
    for k in range(1, p.cap + 1):
        got = rows[k].weight() if k in rows else 0
        print(f"m={m} k={k}: census {got}, p_m {p[k]}")
        assert got == p[k]

# %%
# Twisting by (-1)^edges gives E.
print("E:", [str(c) for c in compute_E(4).coefficients])
