# %% [markdown]
# # When the pieces do not glue
# Reflecting the base triangle across the x-axis gives a quadrilateral whose
# count carries a floor(h0*t) term. No quasi-polynomial of small period fits.

# %%
from periodcollapse import counterexample, detect_quasi, sample_series
from periodcollapse.field import floor

c = counterexample(5)
h0 = c.shared_edges[0].length
series = sample_series(c, 36)
print(series.values[:8])
print(all(v == 5 * t * t + 5 * t - floor(h0 * t) + 1 for t, v in series.samples))

# %%
report = detect_quasi(series, degree=2, p_max=6)
print("\n".join(report.lines()))
