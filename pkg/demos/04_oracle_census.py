"""Isomorphism classes by brute force, and the pair count for Out(F_2)."""

# %%
from graphchi.oracle import iso_census, pair_sum, tree_census
from graphchi.trees import compute_Y

for m in (2, 3):
    for row in iso_census(m):
        auts = [c.aut for c in row.iso_classes]
        print(f"m={m} k={row.k}: {row.labeled_count} labeled graphs, |Aut| = {auts}")

# %%
# Orbit-stabilizer: the weights 1/|Aut| add up to the labeled count over (2m)!.
for row in iso_census(4):
    assert sum(c.weight for c in row.iso_classes) == row.weight()
    print(f"m=4 k={row.k}: {len(row.iso_classes)} classes, weight {row.weight()}")

# %%
# Graphs with a marked forest, counted one by one.
print("pair sum n=1:", pair_sum(1), " Y:", compute_Y(1)[1])

# %%
print("signed leaf-labeled trees:", [tree_census(n, rooted=False) for n in range(3, 8)])
