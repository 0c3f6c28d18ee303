# %% [markdown]
# # Polygons with many irrational edges
# Fan data place copies of the base quadrilateral in each sector of a
# unimodular fan. Refinement adds sectors and edges; every result still has a
# polynomial count whose leading coefficient is the area.

# %%
from periodcollapse import assemble, detect_quasi, sample_series, seed_data
from periodcollapse.geometry import area, canonical_edges

for n in [4, 6, 7, 9, 12]:
    a = assemble(seed_data(n))
    rep = detect_quasi(sample_series(a, 12), degree=2, p_max=1)
    print(n, len(canonical_edges(a.outer)), rep.verdict, rep.fitted.classes[0], "area", area(a.outer))

# %%
from periodcollapse.svg import emit_svg

with open("nonagon.svg", "w") as fh:
    fh.write(emit_svg(assemble(seed_data(9)), t=2))
print("wrote nonagon.svg")
