# %% [markdown]
# # Q(h, k): an irrational quadrilateral with a polynomial count
# Cutting along the diagonal to (1, 1) and moving the two halves by integral
# affine maps gives back the same quadrilateral, so its count is the count of
# a rational polygon with the same area.

# %%
from periodcollapse import (base_pair, count_bruteforce, cut_and_paste, quad_Q,
                            sample_series, fit_polynomial)
from periodcollapse.geometry import area

h0, k0 = base_pair(5)
q = quad_Q(h0, k0)
print("vertices:", [str(v) for v in q.vertices])
print("area:", area(q))

# %%
cp = cut_and_paste(h0, k0)
print("glued equals Q:", cp.glued.same_cycle(q))
print([count_bruteforce(q, t).count for t in range(1, 11)])
print([count_bruteforce(cp.glued, t).count for t in range(1, 11)])

# %%
series = sample_series(q, 20)
print("fit:", fit_polynomial(series, 2))

# %%
# shifting the legs by integers changes only h + k
for m, n in [(1, 0), (1, 1), (2, 2)]:
    print((m, n), fit_polynomial(sample_series(quad_Q(h0 + m, k0 + n), 12), 2))
